//! Parsing and serialization.
//!
//! Two formats carry maps in and out of the library:
//!
//! * a plain node-list grammar for humans — one map per line, nodes as
//!   `x,y` pairs separated by spaces, an optional `name:` prefix, and
//!   `#` comments: `a: 0,0 1/2,1/4 3/4,1/2 1,1`;
//! * a JSON document per map, `{"name": …, "nodes": [["p","q"], …]}`,
//!   with lists of maps as JSON arrays — the interchange format for
//!   generating sets.
//!
//! Parsing reports positions (1-based line and column) for grammar
//! errors and propagates validation errors from map construction
//! unchanged. Serialization is canonical: parsing a serialized map gives
//! back exactly the same map, and serializing a parsed text gives the
//! canonical node list.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::plmap::PLMap;
use crate::rat::Rat;

/// A named map as it appears in JSON interchange.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapDocument {
    pub name: String,
    #[serde(rename = "nodes")]
    pub map: PLMap,
}

/// Parses a single node list like `0,0 1/2,1/4 3/4,1/2 1,1`.
pub fn parse_map(text: &str) -> Result<PLMap, Error> {
    parse_node_list(text, 1, 0)
}

/// The canonical node-list form; [`parse_map`] inverts it exactly.
pub fn serialize_map(f: &PLMap) -> String {
    f.to_string()
}

/// Parses a whole text of named maps, one per line. Lines may carry an
/// optional `name:` prefix and `#` comments; unnamed maps are called
/// `m1, m2, …` by position.
pub fn parse_named_maps(text: &str) -> Result<Vec<(String, PLMap)>, Error> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let (name, body, offset) = match line.find(':') {
            Some(pos) => {
                let name = line[..pos].trim();
                if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '-')
                {
                    return Err(Error::Parse {
                        line: line_no,
                        col: 1,
                        msg: "map names are single words of letters, digits, `_` or `-`"
                            .to_string(),
                    });
                }
                (Some(name.to_string()), &line[pos + 1..], pos + 1)
            }
            None => (None, line, 0),
        };
        let map = parse_node_list(body, line_no, offset)?;
        let name = name.unwrap_or_else(|| format!("m{}", out.len() + 1));
        out.push((name, map));
    }
    Ok(out)
}

/// Loads maps from either format, sniffing JSON by its first character:
/// `[` for an array of documents, `{` for a single document, anything
/// else for the line grammar.
pub fn load_maps(text: &str) -> Result<Vec<(String, PLMap)>, Error> {
    match text.trim_start().chars().next() {
        Some('[') => {
            let docs: Vec<MapDocument> = serde_json::from_str(text).map_err(json_err)?;
            Ok(docs.into_iter().map(|d| (d.name, d.map)).collect())
        }
        Some('{') => {
            let doc: MapDocument = serde_json::from_str(text).map_err(json_err)?;
            Ok(vec![(doc.name, doc.map)])
        }
        _ => parse_named_maps(text),
    }
}

/// Renders named maps in the line grammar, one per line.
pub fn render_text(maps: &[(String, PLMap)]) -> String {
    let mut out = String::new();
    for (name, map) in maps {
        out.push_str(name);
        out.push_str(": ");
        out.push_str(&serialize_map(map));
        out.push('\n');
    }
    out
}

/// Wraps named maps in serializable interchange documents.
pub fn documents(maps: &[(String, PLMap)]) -> Vec<MapDocument> {
    maps.iter()
        .map(|(name, map)| MapDocument {
            name: name.clone(),
            map: map.clone(),
        })
        .collect()
}

/// Renders named maps as a pretty-printed JSON array of documents.
pub fn render_json(maps: &[(String, PLMap)]) -> String {
    let mut s = serde_json::to_string_pretty(&documents(maps)).expect("documents serialize");
    s.push('\n');
    s
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    }
}

/// Parses one node list; `offset` is the byte position of `body` within
/// its original line, so reported columns refer to the full line.
fn parse_node_list(body: &str, line_no: usize, offset: usize) -> Result<PLMap, Error> {
    let mut nodes = Vec::new();
    for (start, token) in tokens(body) {
        let col = offset + start + 1;
        let Some((xs, ys)) = token.split_once(',') else {
            return Err(Error::Parse {
                line: line_no,
                col,
                msg: format!("expected an `x,y` node, found `{token}`"),
            });
        };
        let x = parse_rat(xs, line_no, col)?;
        let y = parse_rat(ys, line_no, col + xs.len() + 1)?;
        nodes.push((x, y));
    }
    if nodes.is_empty() {
        return Err(Error::Parse {
            line: line_no,
            col: offset + 1,
            msg: "empty node list".to_string(),
        });
    }
    PLMap::new(nodes)
}

fn parse_rat(token: &str, line: usize, col: usize) -> Result<Rat, Error> {
    Rat::from_str(token).map_err(|e| match e {
        Error::Parse { msg, .. } => Error::Parse { line, col, msg },
        other => other,
    })
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_model_bump() {
        let a = parse_map("0,0 1/2,1/4 3/4,1/2 1,1").unwrap();
        assert_eq!(serialize_map(&a), "0,0 1/2,1/4 3/4,1/2 1,1");
        assert_eq!(parse_map("0,0 1,1").unwrap(), PLMap::identity());
        // collinear interior node collapses to the canonical form
        assert_eq!(parse_map("0,0 1/2,1/2 1,1").unwrap(), PLMap::identity());
        // whitespace is free
        assert_eq!(
            parse_map("  0,0\t1/2,1/4 3/4,1/2   1,1 ").unwrap(),
            a
        );
    }

    #[test]
    fn round_trips() {
        for s in [
            "0,0 1,1",
            "0,0 1/2,1/4 3/4,1/2 1,1",
            "0,0 1/4,1/4 3/8,5/16 7/16,3/8 1/2,1/2 1,1",
            "0,0 1/3,1/4 2/3,3/4 1,1",
        ] {
            let f = parse_map(s).unwrap();
            assert_eq!(serialize_map(&f), s);
            assert_eq!(parse_map(&serialize_map(&f)).unwrap(), f);
        }
    }

    #[test]
    fn grammar_errors_carry_positions() {
        match parse_map("0,0 1/2 1,1") {
            Err(Error::Parse { line: 1, col: 5, msg }) => {
                assert!(msg.contains("x,y"), "unexpected message: {msg}")
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_map("0,0 1/0,1/2 1,1") {
            Err(Error::Parse { line: 1, col: 5, .. }) => {}
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_map("0,0 1/2,x 1,1") {
            Err(Error::Parse { line: 1, col: 9, .. }) => {}
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(matches!(parse_map(""), Err(Error::Parse { .. })));
        // validation failures are not grammar errors
        assert_eq!(parse_map("0,0 1/2,1/4 1,1 5/4,2"), Err(Error::EndpointsNotFixed));
        assert_eq!(
            parse_map("0,0 1/2,3/4 3/4,1/2 1,1"),
            Err(Error::NotMonotone)
        );
    }

    #[test]
    fn named_lines_and_comments() {
        let text = "\
# the standard pair
a: 0,0 1/2,1/4 3/4,1/2 1,1
b: 0,0 1/4,1/4 3/8,5/16 7/16,3/8 1/2,1/2 1,1   # rescaled

0,0 1,1
";
        let maps = parse_named_maps(text).unwrap();
        assert_eq!(maps.len(), 3);
        assert_eq!(maps[0].0, "a");
        assert_eq!(maps[1].0, "b");
        assert_eq!(maps[2], ("m3".to_string(), PLMap::identity()));

        // errors point at the offending line
        match parse_named_maps("a: 0,0 1,1\nb: 0,0 oops 1,1\n") {
            Err(Error::Parse { line: 2, col, .. }) => assert_eq!(col, 8),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_named_maps("bad name: 0,0 1,1"),
            Err(Error::Parse { line: 1, col: 1, .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let maps = vec![
            ("a".to_string(), parse_map("0,0 1/2,1/4 3/4,1/2 1,1").unwrap()),
            ("id".to_string(), PLMap::identity()),
        ];
        let json = render_json(&maps);
        assert_eq!(load_maps(&json).unwrap(), maps);
        assert!(json.contains("\"1/2\""), "rationals stay exact: {json}");

        let single = "{\"name\":\"a\",\"nodes\":[[\"0\",\"0\"],[\"1/2\",\"1/4\"],[\"3/4\",\"1/2\"],[\"1\",\"1\"]]}";
        assert_eq!(load_maps(single).unwrap(), maps[..1]);

        // invalid node lists are rejected at deserialization time
        let bad = "{\"name\":\"x\",\"nodes\":[[\"0\",\"0\"],[\"3/4\",\"1/2\"],[\"1/2\",\"1/4\"],[\"1\",\"1\"]]}";
        assert!(load_maps(bad).is_err());
    }

    #[test]
    fn text_rendering() {
        let maps = vec![("a".to_string(), parse_map("0,0 1/2,1/4 3/4,1/2 1,1").unwrap())];
        let text = render_text(&maps);
        assert_eq!(text, "a: 0,0 1/2,1/4 3/4,1/2 1,1\n");
        assert_eq!(parse_named_maps(&text).unwrap(), maps);
    }
}
