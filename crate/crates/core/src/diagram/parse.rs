use std::collections::HashSet;
use std::str::FromStr;

use super::{Edge, Endpoint, FreeLoop, TorusDiagram, Winding};
use crate::error::{Error, Result};

/// Parses the line-oriented diagram format:
///
/// ```text
/// crossings <d>
/// edge <c1>.<s1> <c2>.<s2> w <a> <b>
/// loop <a> <b>
/// ```
///
/// `#` starts a comment. Edges are kept in file order.
pub fn parse_diagram(text: &str) -> Result<TorusDiagram> {
    let mut crossings: Option<usize> = None;
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    let mut used: HashSet<Endpoint> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let syntax = |msg: String| Error::Syntax { line, msg };

        let Some(count) = crossings else {
            if tokens.len() != 2 || tokens[0] != "crossings" {
                return Err(syntax("expected header `crossings <d>`".into()));
            }
            let d = tokens[1]
                .parse::<usize>()
                .map_err(|_| syntax(format!("bad crossing count `{}`", tokens[1])))?;
            crossings = Some(d);
            continue;
        };

        match tokens[0] {
            "edge" => {
                if tokens.len() != 6 || tokens[3] != "w" {
                    return Err(syntax("expected `edge <c>.<s> <c>.<s> w <a> <b>`".into()));
                }
                let a = parse_endpoint(tokens[1], line, count)?;
                let b = parse_endpoint(tokens[2], line, count)?;
                for ep in [a, b] {
                    if !used.insert(ep) {
                        return Err(Error::DuplicateSlot {
                            line,
                            crossing: ep.crossing,
                            slot: ep.slot,
                        });
                    }
                }
                let winding =
                    Winding::new(parse_int(tokens[4], line)?, parse_int(tokens[5], line)?);
                edges.push(Edge::new(a, b, winding));
            }
            "loop" => {
                if tokens.len() != 3 {
                    return Err(syntax("expected `loop <a> <b>`".into()));
                }
                loops.push(FreeLoop::new(
                    parse_int(tokens[1], line)?,
                    parse_int(tokens[2], line)?,
                ));
            }
            "crossings" => return Err(syntax("duplicate header".into())),
            other => return Err(syntax(format!("unknown directive `{other}`"))),
        }
    }

    let crossings = crossings.ok_or(Error::Syntax {
        line: 1,
        msg: "missing header `crossings <d>`".into(),
    })?;
    Ok(TorusDiagram::new(crossings, edges, loops))
}

fn parse_int(tok: &str, line: usize) -> Result<i64> {
    tok.parse::<i64>().map_err(|_| Error::Syntax {
        line,
        msg: format!("bad integer `{tok}`"),
    })
}

fn parse_endpoint(tok: &str, line: usize, count: usize) -> Result<Endpoint> {
    let bad = || Error::Syntax {
        line,
        msg: format!("bad slot `{tok}`, expected <crossing>.<slot>"),
    };
    let (c, s) = tok.split_once('.').ok_or_else(bad)?;
    let c: u64 = c.parse().map_err(|_| bad())?;
    let s: u64 = s.parse().map_err(|_| bad())?;
    if s > 3 {
        return Err(Error::SlotOutOfRange { line, slot: s });
    }
    if c >= count as u64 {
        return Err(Error::CrossingOutOfRange {
            line,
            crossing: c,
            count,
        });
    }
    Ok(Endpoint::new(c as usize, s as u8))
}

impl FromStr for TorusDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_diagram(s)
    }
}
