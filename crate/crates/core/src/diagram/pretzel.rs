use super::goeritz::check_pretzel;
use super::{DiagramError, PdCode};

// Quadrant ports, counterclockwise.
const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// PD code of the standard alternating diagram of `P(p,q,r)`: three vertical
/// twist columns joined left to right at the top and bottom, with the
/// outermost arcs closing around the outside.
pub fn pretzel_pd(p: u64, q: u64, r: u64) -> Result<PdCode, DiagramError> {
    check_pretzel(p, q, r)?;
    let cols = [p as usize, q as usize, r as usize];
    let offset = [0, cols[0], cols[0] + cols[1]];
    let n = cols.iter().sum::<usize>();
    let id = |c: usize, t: usize| offset[c] + t;

    // link[x][port] = (y, port')
    let mut link = vec![[(usize::MAX, 0usize); 4]; n];
    let mut join = |a: (usize, usize), b: (usize, usize)| {
        link[a.0][a.1] = b;
        link[b.0][b.1] = a;
    };
    for c in 0..3 {
        for t in 0..cols[c] - 1 {
            join((id(c, t), SW), (id(c, t + 1), NW));
            join((id(c, t), SE), (id(c, t + 1), NE));
        }
        let next = (c + 1) % 3;
        join((id(c, 0), NE), (id(next, 0), NW));
        join((id(c, cols[c] - 1), SE), (id(next, cols[next] - 1), SW));
    }

    // The NW–SE diagonal passes under at every crossing, so the regions
    // between columns form the under-over color class.
    let is_under = |port: usize| port == NW || port == SE;
    let mut labels = vec![[0u32; 4]; n];
    let mut entry_under = vec![usize::MAX; n];
    let start = (id(0, 0), NW);
    let (mut x, mut port) = start;
    let mut label = 0u32;
    loop {
        if is_under(port) {
            entry_under[x] = port;
        }
        let exit = (port + 2) % 4;
        label += 1;
        labels[x][exit] = label;
        (x, port) = link[x][exit];
        labels[x][port] = label;
        if (x, port) == start {
            break;
        }
    }
    if label as usize != 2 * n {
        return Err(DiagramError::NotAKnot(format!("P({p},{q},{r}) is not a knot")));
    }
    let crossings = (0..n)
        .map(|x| {
            let s = entry_under[x];
            [labels[x][s], labels[x][(s + 1) % 4], labels[x][(s + 2) % 4], labels[x][(s + 3) % 4]]
        })
        .collect();
    PdCode::from_crossings(crossings)
}
