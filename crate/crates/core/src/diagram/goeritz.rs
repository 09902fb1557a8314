use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{faces, is_reduced, DiagramError, FaceSet, PdCode};
use crate::exactmat::{IntMatrix, IntSymMatrix};

/// Which pair of opposite quadrants a color class occupies at every crossing
/// of an alternating diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColorClass {
    /// Quadrants 0 and 2: counterclockwise from an under-strand end to an over-strand end.
    UnderOver,
    /// Quadrants 1 and 3.
    OverUnder,
}

impl ColorClass {
    fn quadrants(self) -> (usize, usize) {
        match self {
            ColorClass::UnderOver => (0, 2),
            ColorClass::OverUnder => (1, 3),
        }
    }

    pub fn other(self) -> ColorClass {
        match self {
            ColorClass::UnderOver => ColorClass::OverUnder,
            ColorClass::OverUnder => ColorClass::UnderOver,
        }
    }
}

/// Proper two-coloring of the faces; `black` faces are listed in ascending
/// face index and `black[deleted]` plays the unbounded region `f₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub is_black: Vec<bool>,
    pub black: Vec<usize>,
    pub deleted: usize,
    pub class: ColorClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Matrix(IntSymMatrix),
    Pretzel([u64; 3]),
    Pd(String),
    Unknot,
}

/// Positive-definite Goeritz matrix together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzResult {
    pub q: IntSymMatrix,
    pub determinant: BigInt,
    pub mirrored: bool,
    pub provenance: Provenance,
    /// Row index → face index, for diagram input.
    pub black_face_map: Option<Vec<usize>>,
}

/// Proper two-coloring of the faces (adjacent quadrants differ), with
/// face 0 in color `false`.
pub fn checkerboard(f: &FaceSet) -> Result<Vec<bool>, DiagramError> {
    let mut adj = vec![Vec::new(); f.len()];
    for q in &f.quadrants {
        for j in 0..4 {
            let (u, v) = (q[j], q[(j + 1) % 4]);
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut color = vec![None; f.len()];
    for start in 0..f.len() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let cu = color[u].expect("colored before push");
            for &v in &adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        stack.push(v);
                    }
                    Some(cv) if cv == cu => {
                        return Err(DiagramError::InconsistentDiagram("faces admit no checkerboard coloring".into()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.expect("all faces visited")).collect())
}

/// Checkerboard coloring whose black class holds the `class` quadrants of
/// crossing 0 (and, for alternating diagrams, of every crossing).
pub fn coloring(f: &FaceSet, class: ColorClass, f0: Option<usize>) -> Result<Coloring, DiagramError> {
    let colors = checkerboard(f)?;
    let black_color = colors[f.quadrants[0][class.quadrants().0]];
    let is_black: Vec<bool> = colors.iter().map(|&c| c == black_color).collect();
    let black: Vec<usize> = (0..f.len()).filter(|&i| is_black[i]).collect();
    let deleted = f0.unwrap_or(0);
    if deleted >= black.len() {
        return Err(DiagramError::InvalidFace { index: deleted, available: black.len() });
    }
    Ok(Coloring { is_black, black, deleted, class })
}

/// Reduced Goeritz matrix of one coloring, with a uniform crossing sign:
/// off-diagonal `−sign·(crossings joining f_i, f_j)`, diagonal from
/// zero row sums, row/column of `f₀` removed.
pub fn goeritz_candidate(f: &FaceSet, c: &Coloring, sign: i64) -> IntSymMatrix {
    let m = c.black.len();
    let mut row_of = vec![usize::MAX; f.len()];
    for (r, &face) in c.black.iter().enumerate() {
        row_of[face] = r;
    }
    let (qa, qb) = c.class.quadrants();
    let mut full = IntMatrix::zeros(m);
    let s = BigInt::from(sign);
    for q in &f.quadrants {
        let (u, v) = (row_of[q[qa]], row_of[q[qb]]);
        if u == v {
            continue;
        }
        full[(u, v)] -= &s;
        full[(v, u)] -= &s;
        full[(u, u)] += &s;
        full[(v, v)] += &s;
    }
    let keep: Vec<usize> = (0..m).filter(|&r| r != c.deleted).collect();
    let mut q = IntMatrix::zeros(keep.len());
    for (i, &r) in keep.iter().enumerate() {
        for (j, &t) in keep.iter().enumerate() {
            q[(i, j)] = full[(r, t)].clone();
        }
    }
    IntSymMatrix::new(q).expect("Laplacian is symmetric")
}

/// Goeritz matrix of a reduced alternating diagram.
///
/// Candidates are tried in the order (under-over class, +1), (under-over,
/// −1), (over-under, +1), (over-under, −1); the first positive-definite one
/// is returned. `f0` indexes the black faces of the selected class.
pub fn goeritz_from_pd(pd: &PdCode, f0: Option<usize>) -> Result<GoeritzResult, DiagramError> {
    goeritz_from_pd_with_class(pd, f0, None)
}

/// As [`goeritz_from_pd`], optionally forcing the black color class.
pub fn goeritz_from_pd_with_class(
    pd: &PdCode,
    f0: Option<usize>,
    class: Option<ColorClass>,
) -> Result<GoeritzResult, DiagramError> {
    if !pd.is_alternating() {
        return Err(DiagramError::NotAlternating);
    }
    let comps = pd.components();
    if comps != 1 {
        return Err(DiagramError::NotAKnot(format!("diagram has {comps} components")));
    }
    let f = faces(pd)?;
    if !is_reduced(pd, &f) {
        return Err(DiagramError::NotReduced);
    }
    let classes = match class {
        Some(c) => vec![c],
        None => vec![ColorClass::UnderOver, ColorClass::OverUnder],
    };
    for class in classes {
        let col = coloring(&f, class, f0)?;
        for sign in [1, -1] {
            let q = goeritz_candidate(&f, &col, sign);
            if q.is_positive_definite() {
                let determinant = q.determinant();
                if determinant.is_even() {
                    return Err(DiagramError::EvenDeterminant(determinant));
                }
                let map =
                    col.black.iter().enumerate().filter(|&(r, _)| r != col.deleted).map(|(_, &face)| face).collect();
                return Ok(GoeritzResult {
                    q,
                    determinant,
                    mirrored: sign == -1,
                    provenance: Provenance::Pd(pd.to_string()),
                    black_face_map: Some(map),
                });
            }
        }
    }
    Err(DiagramError::NoDefiniteColoring)
}

/// Wraps a raw symmetric matrix, negating it if that makes it positive definite.
pub fn goeritz_from_matrix(raw: &IntSymMatrix) -> Result<GoeritzResult, DiagramError> {
    let (q, mirrored) = if raw.is_positive_definite() {
        (raw.clone(), false)
    } else {
        let neg = raw.negated();
        if !neg.is_positive_definite() {
            return Err(DiagramError::Indefinite);
        }
        (neg, true)
    };
    let determinant = q.determinant();
    if determinant.is_even() {
        return Err(DiagramError::EvenDeterminant(determinant));
    }
    Ok(GoeritzResult { q, determinant, mirrored, provenance: Provenance::Matrix(raw.clone()), black_face_map: None })
}

/// The unknot, as the empty Goeritz matrix.
pub fn goeritz_unknot() -> GoeritzResult {
    GoeritzResult {
        q: IntSymMatrix::empty(),
        determinant: BigInt::from(1),
        mirrored: false,
        provenance: Provenance::Unknot,
        black_face_map: None,
    }
}

/// `[[p+q, −q], [−q, q+r]]` for the three-strand pretzel knot `P(p,q,r)`.
pub fn goeritz_from_pretzel(p: u64, q: u64, r: u64) -> Result<GoeritzResult, DiagramError> {
    check_pretzel(p, q, r)?;
    let (p, q, r) = (p as i128, q as i128, r as i128);
    let m = IntSymMatrix::from_rows(&[vec![p + q, -q], vec![-q, q + r]]).expect("symmetric by construction");
    let determinant = m.determinant();
    if determinant.is_even() {
        return Err(DiagramError::EvenDeterminant(determinant));
    }
    Ok(GoeritzResult {
        q: m,
        determinant,
        mirrored: false,
        provenance: Provenance::Pretzel([p as u64, q as u64, r as u64]),
        black_face_map: None,
    })
}

pub(crate) fn check_pretzel(p: u64, q: u64, r: u64) -> Result<(), DiagramError> {
    if p == 0 || q == 0 || r == 0 {
        return Err(DiagramError::InvalidParameter(format!("pretzel parameters must be positive, got ({p},{q},{r})")));
    }
    let evens = [p, q, r].iter().filter(|x| *x % 2 == 0).count();
    if evens >= 2 {
        return Err(DiagramError::NotAKnot(format!("P({p},{q},{r}) has {evens} even parameters")));
    }
    Ok(())
}
