use std::fmt;

use super::DiagramError;

/// Planar diagram code: one quadruple of edge labels per crossing, listed
/// counterclockwise starting at the incoming under-strand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
}

impl PdCode {
    /// Validates that labels are exactly `1..=2n`, each used twice.
    pub fn from_crossings(crossings: Vec<[u32; 4]>) -> Result<Self, DiagramError> {
        let n = crossings.len();
        if n == 0 {
            return Err(DiagramError::LabelError("diagram has no crossings".into()));
        }
        let mut count = vec![0u8; 2 * n + 1];
        for x in &crossings {
            for &l in x {
                if l == 0 || l as usize > 2 * n {
                    return Err(DiagramError::LabelError(format!("label {l} outside 1..={}", 2 * n)));
                }
                count[l as usize] += 1;
            }
        }
        if let Some(l) = (1..=2 * n).find(|&l| count[l] != 2) {
            return Err(DiagramError::LabelError(format!("label {l} appears {} times, expected 2", count[l])));
        }
        Ok(PdCode { crossings })
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    /// Number of crossings.
    pub fn n(&self) -> usize {
        self.crossings.len()
    }

    /// For each label, its two `(crossing, position)` occurrences.
    pub(crate) fn edge_ends(&self) -> Vec<[(usize, usize); 2]> {
        let mut ends = vec![[(usize::MAX, 0); 2]; 2 * self.n() + 1];
        let mut seen = vec![0usize; 2 * self.n() + 1];
        for (x, q) in self.crossings.iter().enumerate() {
            for (pos, &l) in q.iter().enumerate() {
                ends[l as usize][seen[l as usize]] = (x, pos);
                seen[l as usize] += 1;
            }
        }
        ends
    }

    /// The other occurrence of the edge attached at `(x, pos)`.
    pub(crate) fn other_end(ends: &[[(usize, usize); 2]], label: u32, at: (usize, usize)) -> (usize, usize) {
        let [e0, e1] = ends[label as usize];
        if e0 == at {
            e1
        } else {
            e0
        }
    }

    /// Every edge joins an over-passage to an under-passage.
    pub fn is_alternating(&self) -> bool {
        let ends = self.edge_ends();
        (1..=2 * self.n()).all(|l| {
            let [(_, p0), (_, p1)] = ends[l];
            (p0 % 2) != (p1 % 2)
        })
    }

    /// Number of link components, following strands straight through crossings.
    pub fn components(&self) -> usize {
        let ends = self.edge_ends();
        let mut seen = vec![false; 2 * self.n() + 1];
        let mut comps = 0;
        for start in 1..=2 * self.n() {
            if seen[start] {
                continue;
            }
            comps += 1;
            let mut label = start as u32;
            let mut at = ends[start][0];
            while !seen[label as usize] {
                seen[label as usize] = true;
                let (x, pos) = PdCode::other_end(&ends, label, at);
                let through = (pos + 2) % 4;
                at = (x, through);
                label = self.crossings[x][through];
            }
        }
        comps
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "X({a},{b},{c},{d})")?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated `X(a,b,c,d)` terms.
pub fn parse_pd(text: &str) -> Result<PdCode, DiagramError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let mut crossings = Vec::new();
    loop {
        p.skip_ws();
        if p.pos == p.src.len() {
            break;
        }
        crossings.push(p.term()?);
    }
    if crossings.is_empty() {
        return Err(DiagramError::SyntaxError { offset: p.pos, message: "no crossings".into() });
    }
    PdCode::from_crossings(crossings)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, DiagramError> {
        Err(DiagramError::SyntaxError { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), DiagramError> {
        self.skip_inner_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    // spaces and tabs only; a term may not span lines
    fn skip_inner_ws(&mut self) {
        while matches!(self.src.get(self.pos), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn int(&mut self) -> Result<u32, DiagramError> {
        self.skip_inner_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a label");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        s.parse().map_err(|_| DiagramError::SyntaxError { offset: start, message: "label too large".into() })
    }

    fn term(&mut self) -> Result<[u32; 4], DiagramError> {
        if self.src.get(self.pos) != Some(&b'X') {
            return self.err("expected 'X('");
        }
        self.pos += 1;
        if self.src.get(self.pos) != Some(&b'(') {
            return self.err("expected '(' after 'X'");
        }
        self.pos += 1;
        let mut q = [0u32; 4];
        for (i, slot) in q.iter_mut().enumerate() {
            if i > 0 {
                self.expect(b',')?;
            }
            *slot = self.int()?;
        }
        self.expect(b')')?;
        Ok(q)
    }
}
