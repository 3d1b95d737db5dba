//! Line-oriented diagram text format.
//!
//! ```text
//! # comment
//! link trefoil
//! X 0 1 2
//! X 1 2 0
//! X 2 0 1
//! loop
//! ```
//!
//! `X <over> <under1> <under2>` declares a crossing with zero-based arc
//! indices and `loop` declares one crossing-free component. The arc count is
//! one more than the largest index referenced. Several `link` blocks may
//! share one file.

use std::fmt::Write as _;

use super::{Crossing, Diagram, DiagramError};

const DEFAULT_NAME: &str = "unnamed";

#[derive(Default)]
struct Block {
    name: Option<String>,
    crossings: Vec<(usize, usize, usize)>,
    loops: usize,
    touched: bool,
}

impl Block {
    fn finish(self) -> Result<Diagram, DiagramError> {
        Diagram::from_crossings(
            self.name.unwrap_or_else(|| DEFAULT_NAME.to_string()),
            &self.crossings,
            self.loops,
        )
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> DiagramError {
    DiagramError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into `(1-based column, token)` pairs, dropping comments.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let line = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Parses every diagram in `text`, in file order.
pub fn parse_diagrams(text: &str) -> Result<Vec<Diagram>, DiagramError> {
    let mut done = Vec::new();
    let mut current = Block::default();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let toks = tokens(raw);
        let Some(&(col, head)) = toks.first() else {
            continue;
        };
        match head {
            "link" => {
                if toks.len() < 2 {
                    return Err(syntax(line_no, col, "`link` needs a name"));
                }
                if current.touched {
                    done.push(std::mem::take(&mut current).finish()?);
                }
                // The name is the rest of the line, comment stripped.
                let start = toks[1].0 - 1;
                let body = raw.split('#').next().unwrap_or("");
                current.name = Some(body[start..].trim().to_string());
                current.touched = true;
            }
            "X" => {
                if toks.len() != 4 {
                    let column = toks.get(4).map_or(col, |t| t.0);
                    return Err(syntax(
                        line_no,
                        column,
                        format!("`X` takes exactly 3 arc indices, found {}", toks.len() - 1),
                    ));
                }
                let mut idx = [0usize; 3];
                for (slot, &(c, tok)) in idx.iter_mut().zip(&toks[1..]) {
                    *slot = tok.parse().map_err(|_| {
                        syntax(line_no, c, format!("expected an arc index, found `{tok}`"))
                    })?;
                }
                current.crossings.push((idx[0], idx[1], idx[2]));
                current.touched = true;
            }
            "loop" => {
                if let Some(&(c, _)) = toks.get(1) {
                    return Err(syntax(line_no, c, "`loop` takes no arguments"));
                }
                current.loops += 1;
                current.touched = true;
            }
            other => {
                return Err(syntax(line_no, col, format!("unknown directive `{other}`")));
            }
        }
    }
    if current.touched || done.is_empty() {
        done.push(current.finish()?);
    }
    Ok(done)
}

/// Parses a text holding exactly one diagram.
pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    let mut all = parse_diagrams(text)?;
    if all.len() != 1 {
        return Err(syntax(
            1,
            1,
            format!("expected one diagram, found {}", all.len()),
        ));
    }
    Ok(all.pop().unwrap())
}

/// Writes `d` in the text format; `parse_diagram` reads it back unchanged.
pub fn serialize_diagram(d: &Diagram) -> String {
    let mut out = String::new();
    writeln!(out, "link {}", d.name()).unwrap();
    for &Crossing {
        over,
        under_a,
        under_b,
    } in d.crossings()
    {
        writeln!(out, "X {over} {under_a} {under_b}").unwrap();
    }
    for _ in 0..d.free_loops() {
        out.push_str("loop\n");
    }
    out
}
