use super::{DiagramError, PdCode};

/// One side of an edge: the face lies to the right when walking the edge
/// away from `from = (crossing, position)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSide {
    pub edge: u32,
    pub from: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Corners `(crossing, j)`: the quadrant between positions `j` and `j+1`.
    pub corners: Vec<(usize, usize)>,
    pub sides: Vec<EdgeSide>,
}

/// Regions of a planar diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    /// `quadrants[x][j]` is the face in quadrant `j` of crossing `x`.
    pub quadrants: Vec<[usize; 4]>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// Walks the quadrants of every crossing into face cycles.
///
/// Leaving quadrant `j` of `x` along the edge at position `j+1`, the next
/// quadrant on the same face is `m` at the edge's far end `(y, m)`.
pub fn faces(pd: &PdCode) -> Result<FaceSet, DiagramError> {
    let n = pd.n();
    if !is_connected(pd) {
        return Err(DiagramError::InconsistentDiagram("diagram is not connected".into()));
    }
    let ends = pd.edge_ends();
    let mut quadrants = vec![[usize::MAX; 4]; n];
    let mut faces = Vec::new();

    for x0 in 0..n {
        for j0 in 0..4 {
            if quadrants[x0][j0] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut face = Face { corners: Vec::new(), sides: Vec::new() };
            let (mut x, mut j) = (x0, j0);
            loop {
                if quadrants[x][j] != usize::MAX {
                    return Err(DiagramError::InconsistentDiagram(format!(
                        "face walk from crossing {x0} re-entered quadrant ({x}, {j})"
                    )));
                }
                quadrants[x][j] = id;
                face.corners.push((x, j));
                let leave = (j + 1) % 4;
                let edge = pd.crossings()[x][leave];
                face.sides.push(EdgeSide { edge, from: (x, leave) });
                (x, j) = PdCode::other_end(&ends, edge, (x, leave));
                if (x, j) == (x0, j0) {
                    break;
                }
            }
            faces.push(face);
        }
    }

    if faces.len() != n + 2 {
        return Err(DiagramError::InconsistentDiagram(format!(
            "{} faces for {n} crossings; a planar diagram has {}",
            faces.len(),
            n + 2
        )));
    }
    Ok(FaceSet { faces, quadrants })
}

fn is_connected(pd: &PdCode) -> bool {
    let n = pd.n();
    let ends = pd.edge_ends();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &l in &pd.crossings()[x] {
            for &(y, _) in &ends[l as usize] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// No crossing touches the same face in two of its quadrants.
pub fn is_reduced(_pd: &PdCode, f: &FaceSet) -> bool {
    f.quadrants.iter().all(|q| (0..4).all(|a| (a + 1..4).all(|b| q[a] != q[b])))
}
