//! Planar diagram (PD) code import.
//!
//! Accepted syntax: `PD[X[a,b,c,d], ...]` or a bare list of `X[a,b,c,d]`
//! tuples. Edges carry labels `1..=2n`. Each tuple lists its edges
//! counterclockwise starting from the incoming under-edge, so the
//! under-strand runs `a -> c` and the over-strand occupies `b` and `d`.
//! Crossing-free components are declared with `Loop[k]` or a bare `loop`.

use super::{Crossing, Diagram, DiagramError};

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    line_start: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            src: text.as_bytes(),
            pos: 0,
            line: 1,
            line_start: 0,
        }
    }

    fn position(&self) -> (usize, usize) {
        (self.line, self.pos - self.line_start + 1)
    }

    fn err(&self, message: impl Into<String>) -> DiagramError {
        let (line, column) = self.position();
        DiagramError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_blank(&mut self) {
        while let Some(&b) = self.src.get(self.pos) {
            match b {
                b'\n' => {
                    self.pos += 1;
                    self.line += 1;
                    self.line_start = self.pos;
                }
                b'#' => {
                    while self.src.get(self.pos).is_some_and(|&b| b != b'\n') {
                        self.pos += 1;
                    }
                }
                b if b.is_ascii_whitespace() || b == b',' => self.pos += 1,
                _ => break,
            }
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, want: u8) -> Result<(), DiagramError> {
        self.skip_blank();
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", want as char)))
        }
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn number(&mut self) -> Result<usize, DiagramError> {
        self.skip_blank();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an edge label"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("edge label out of range"))
    }

    /// `[n, n, ...]` after an identifier.
    fn bracketed(&mut self) -> Result<Vec<usize>, DiagramError> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        loop {
            self.skip_blank();
            if self.peek() == Some(b']') {
                self.pos += 1;
                return Ok(out);
            }
            out.push(self.number()?);
        }
    }
}

fn parse_tuples(text: &str) -> Result<(Vec<[usize; 4]>, usize), DiagramError> {
    let mut sc = Scanner::new(text);
    let mut tuples = Vec::new();
    let mut loops = 0;
    let mut pd_depth = 0usize;
    loop {
        sc.skip_blank();
        let Some(b) = sc.peek() else { break };
        if b == b']' && pd_depth > 0 {
            sc.pos += 1;
            pd_depth -= 1;
            continue;
        }
        if !b.is_ascii_alphabetic() {
            return Err(sc.err(format!("unexpected character `{}`", b as char)));
        }
        let (line, column) = sc.position();
        match sc.ident() {
            "PD" => {
                sc.expect(b'[')?;
                pd_depth += 1;
            }
            "X" => {
                let labels = sc.bracketed()?;
                let tuple: [usize; 4] = labels.as_slice().try_into().map_err(|_| {
                    DiagramError::InconsistentEdges(format!(
                        "crossing {} has {} edge labels, expected 4",
                        tuples.len(),
                        labels.len()
                    ))
                })?;
                tuples.push(tuple);
            }
            "Loop" => {
                sc.bracketed()?;
                loops += 1;
            }
            "loop" => loops += 1,
            other => {
                return Err(DiagramError::Syntax {
                    line,
                    column,
                    message: format!("unknown PD entry `{other}`"),
                });
            }
        }
    }
    if pd_depth != 0 {
        return Err(sc.err("unclosed `PD[`"));
    }
    Ok((tuples, loops))
}

/// Converts a PD code into a [`Diagram`], merging the two over-strand
/// edges at every crossing into one arc. Arcs are numbered by their
/// smallest edge label.
pub fn import_pd_code(text: &str) -> Result<Diagram, DiagramError> {
    let (tuples, loops) = parse_tuples(text)?;
    let edges = 2 * tuples.len();

    let mut uses = vec![0usize; edges + 1];
    for t in &tuples {
        for &e in t {
            if e == 0 || e > edges {
                return Err(DiagramError::InconsistentEdges(format!(
                    "edge label {e} outside 1..={edges}"
                )));
            }
            uses[e] += 1;
        }
    }
    if let Some((edge, &count)) = uses.iter().enumerate().skip(1).find(|(_, &n)| n != 2) {
        return Err(DiagramError::EdgeMultiplicity { edge, count });
    }

    // The under-strand is oriented a -> c; an edge can enter and leave an
    // under-crossing at most once each.
    let mut incoming = vec![false; edges + 1];
    let mut outgoing = vec![false; edges + 1];
    for t in &tuples {
        for (seen, e) in [(&mut incoming, t[0]), (&mut outgoing, t[2])] {
            if std::mem::replace(&mut seen[e], true) {
                return Err(DiagramError::AmbiguousStrand { edge: e });
            }
        }
    }

    let mut parent: Vec<usize> = (0..=edges).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for t in &tuples {
        let (a, b) = (find(&mut parent, t[1]), find(&mut parent, t[3]));
        // Keep the smaller label as the root so arc numbering is stable.
        let (lo, hi) = (a.min(b), a.max(b));
        parent[hi] = lo;
    }

    let mut arc_of_root = vec![usize::MAX; edges + 1];
    let mut arcs = 0;
    for e in 1..=edges {
        let root = find(&mut parent, e);
        if arc_of_root[root] == usize::MAX {
            arc_of_root[root] = arcs;
            arcs += 1;
        }
    }
    let mut arc = |e: usize| arc_of_root[find(&mut parent, e)];
    let crossings = tuples
        .iter()
        .map(|t| Crossing::new(arc(t[1]), arc(t[0]), arc(t[2])))
        .collect();
    Diagram::new("unnamed", arcs, crossings, loops)
}
