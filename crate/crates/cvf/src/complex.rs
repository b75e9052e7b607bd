//! Finite regular cell complexes.
//!
//! A complex stores its cells in a canonical total order, by dimension and
//! then by lexicographic id. Every matrix produced by this crate indexes rows
//! and columns in that order, so identical input text always yields identical
//! layouts.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, ParseError, Result};
use crate::homology::Gf2Matrix;
use crate::parse::{self, Directive};

/// Canonical cell identifier. Simplicial cells use the dot-joined ascending
/// vertex list (`"0.1.3"`); explicit CW cells use their declared name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CellId(pub String);

impl CellId {
    pub fn of_vertices(vertices: &[u32]) -> CellId {
        let parts: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
        CellId(parts.join("."))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for CellId {
    fn from(s: &str) -> CellId {
        CellId(s.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComplexMode {
    Simplicial,
    Cw,
}

/// How two same-dimensional cells count as lower adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AdjacencyMode {
    /// Share a codimension-1 face.
    #[default]
    Codim1,
    /// Share any common face, of any dimension.
    AnyFace,
}

#[derive(Debug, Clone)]
pub(crate) struct CellData {
    pub id: CellId,
    pub dim: usize,
    /// Codimension-1 faces, as canonical indices, ascending.
    pub faces: Vec<usize>,
    /// Cells having this one as a codimension-1 face, ascending.
    pub cofaces: Vec<usize>,
    /// Vertex labels for simplicial cells.
    pub vertices: Option<Vec<u32>>,
}

/// A finite regular cell complex.
#[derive(Debug, Clone)]
pub struct CellComplex {
    cells: Vec<CellData>,
    index: HashMap<CellId, usize>,
    mode: ComplexMode,
    max_dim: isize,
}

/// Parse the complex described by fixture text. `match` lines are ignored
/// here; they belong to the vector field.
pub fn parse_complex(text: &str) -> Result<CellComplex, ParseError> {
    let directives = parse::scan(text)?;
    build_complex(&directives)
}

pub(crate) fn build_complex(directives: &[Directive]) -> Result<CellComplex, ParseError> {
    let mut mode = ComplexMode::Simplicial;
    // id -> (dim, explicit faces or None, vertices, declaring line)
    let mut raw: BTreeMap<CellId, (usize, Option<Vec<String>>, Option<Vec<u32>>, usize)> =
        BTreeMap::new();

    for d in directives {
        match d {
            Directive::Simplex { vertices, .. } => {
                // Close under faces: every nonempty subset is a cell.
                for subset in nonempty_subsets(vertices) {
                    let id = CellId::of_vertices(&subset);
                    let dim = subset.len() - 1;
                    raw.entry(id).or_insert((dim, None, Some(subset), 0));
                }
            }
            Directive::Cell {
                line,
                name,
                dim,
                faces,
            } => {
                mode = ComplexMode::Cw;
                let id = CellId(name.clone());
                if raw.contains_key(&id) {
                    return Err(ParseError::DuplicateCell {
                        line: *line,
                        id: name.clone(),
                    });
                }
                raw.insert(id, (*dim, Some(faces.clone()), None, *line));
            }
            Directive::Match { .. } => {}
        }
    }

    // Validate explicit face lists.
    for (id, (dim, faces, _, _)) in &raw {
        let Some(faces) = faces else { continue };
        let mut seen = HashSet::new();
        for f in faces {
            if !seen.insert(f.clone()) {
                return Err(ParseError::IrregularFace {
                    cell: id.0.clone(),
                    face: f.clone(),
                });
            }
            match raw.get(&CellId(f.clone())) {
                None => {
                    return Err(ParseError::DanglingFace {
                        cell: id.0.clone(),
                        face: f.clone(),
                    })
                }
                Some((fdim, _, _, _)) => {
                    if *dim == 0 || *fdim != dim - 1 {
                        return Err(ParseError::FaceDimensionMismatch {
                            cell: id.0.clone(),
                            face: f.clone(),
                            face_dim: *fdim,
                            expected: dim.wrapping_sub(1),
                        });
                    }
                }
            }
        }
    }

    // Canonical order: (dim, id lexicographic).
    let mut ordered: Vec<(CellId, usize)> = raw.iter().map(|(id, v)| (id.clone(), v.0)).collect();
    ordered.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    let index: HashMap<CellId, usize> = ordered
        .iter()
        .enumerate()
        .map(|(i, (id, _))| (id.clone(), i))
        .collect();

    let mut cells: Vec<CellData> = Vec::with_capacity(ordered.len());
    for (id, dim) in &ordered {
        let (_, faces, vertices, _) = raw.get(id).unwrap();
        let face_ix: Vec<usize> = match (faces, vertices) {
            (Some(fs), _) => {
                let mut v: Vec<usize> = fs.iter().map(|f| index[&CellId(f.clone())]).collect();
                v.sort_unstable();
                v
            }
            (None, Some(vs)) => {
                let mut v: Vec<usize> = facet_subsets(vs)
                    .into_iter()
                    .map(|facet| index[&CellId::of_vertices(&facet)])
                    .collect();
                v.sort_unstable();
                v
            }
            (None, None) => unreachable!(),
        };
        cells.push(CellData {
            id: id.clone(),
            dim: *dim,
            faces: face_ix,
            cofaces: Vec::new(),
            vertices: vertices.clone(),
        });
    }

    let mut cofaces: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
    for (ix, cell) in cells.iter().enumerate() {
        for &f in &cell.faces {
            cofaces[f].push(ix);
        }
    }
    for (ix, cf) in cofaces.into_iter().enumerate() {
        cells[ix].cofaces = cf;
    }

    let max_dim = cells.iter().map(|c| c.dim as isize).max().unwrap_or(-1);
    Ok(CellComplex {
        cells,
        index,
        mode,
        max_dim,
    })
}

fn nonempty_subsets(vertices: &[u32]) -> Vec<Vec<u32>> {
    let n = vertices.len();
    let mut out = Vec::with_capacity((1usize << n) - 1);
    for mask in 1u32..(1 << n) {
        let subset: Vec<u32> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| vertices[i])
            .collect();
        out.push(subset);
    }
    out
}

fn facet_subsets(vertices: &[u32]) -> Vec<Vec<u32>> {
    if vertices.len() <= 1 {
        return Vec::new();
    }
    (0..vertices.len())
        .map(|drop| {
            vertices
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, v)| *v)
                .collect()
        })
        .collect()
}

impl CellComplex {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Highest cell dimension, or -1 for the empty complex.
    pub fn max_dim(&self) -> isize {
        self.max_dim
    }

    pub fn mode(&self) -> ComplexMode {
        self.mode
    }

    pub fn contains(&self, id: &CellId) -> bool {
        self.index.contains_key(id)
    }

    pub fn index_of(&self, id: &CellId) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownCell(id.clone()))
    }

    pub fn id(&self, ix: usize) -> &CellId {
        &self.cells[ix].id
    }

    pub fn dim(&self, ix: usize) -> usize {
        self.cells[ix].dim
    }

    pub fn vertices(&self, ix: usize) -> Option<&[u32]> {
        self.cells[ix].vertices.as_deref()
    }

    /// Canonical indices of all cells of dimension `d`, ascending.
    pub fn cells_of_dim(&self, d: usize) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&ix| self.cells[ix].dim == d)
            .collect()
    }

    /// All cell indices in canonical order.
    pub fn all_cells(&self) -> impl Iterator<Item = usize> + '_ {
        0..self.cells.len()
    }

    pub(crate) fn faces_ix(&self, ix: usize) -> &[usize] {
        &self.cells[ix].faces
    }

    pub(crate) fn cofaces_ix(&self, ix: usize) -> &[usize] {
        &self.cells[ix].cofaces
    }

    /// Codimension-1 faces of a cell.
    pub fn faces(&self, id: &CellId) -> Result<BTreeSet<CellId>> {
        let ix = self.index_of(id)?;
        Ok(self.faces_ix(ix).iter().map(|&f| self.id(f).clone()).collect())
    }

    /// Cells having `id` as a codimension-1 face.
    pub fn cofaces(&self, id: &CellId) -> Result<BTreeSet<CellId>> {
        let ix = self.index_of(id)?;
        Ok(self
            .cofaces_ix(ix)
            .iter()
            .map(|&f| self.id(f).clone())
            .collect())
    }

    /// Downward closure of a cell (all iterated faces, the cell excluded).
    pub(crate) fn closure_ix(&self, ix: usize) -> HashSet<usize> {
        let mut seen = HashSet::new();
        let mut stack: Vec<usize> = self.faces_ix(ix).to_vec();
        while let Some(f) = stack.pop() {
            if seen.insert(f) {
                stack.extend_from_slice(self.faces_ix(f));
            }
        }
        seen
    }

    pub(crate) fn lower_adjacent_ix(&self, a: usize, b: usize, mode: AdjacencyMode) -> bool {
        if a == b {
            return false;
        }
        match mode {
            AdjacencyMode::Codim1 => {
                let (fa, fb) = (self.faces_ix(a), self.faces_ix(b));
                // Both are sorted.
                let (mut i, mut j) = (0, 0);
                while i < fa.len() && j < fb.len() {
                    match fa[i].cmp(&fb[j]) {
                        std::cmp::Ordering::Equal => return true,
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                    }
                }
                false
            }
            AdjacencyMode::AnyFace => {
                let ca = self.closure_ix(a);
                self.closure_ix(b).iter().any(|f| ca.contains(f))
            }
        }
    }

    /// Lower adjacency with the witnessing faces restricted: faces lying in
    /// the closure of `excluded` (or equal to it) never count.
    pub(crate) fn lower_adjacent_excluding_ix(
        &self,
        a: usize,
        b: usize,
        excluded: usize,
        mode: AdjacencyMode,
    ) -> bool {
        if a == b {
            return false;
        }
        match mode {
            AdjacencyMode::Codim1 => {
                let fb: HashSet<usize> = self.faces_ix(b).iter().copied().collect();
                self.faces_ix(a)
                    .iter()
                    .any(|f| *f != excluded && fb.contains(f))
            }
            AdjacencyMode::AnyFace => {
                let mut banned = self.closure_ix(excluded);
                banned.insert(excluded);
                let ca = self.closure_ix(a);
                self.closure_ix(b)
                    .iter()
                    .any(|f| ca.contains(f) && !banned.contains(f))
            }
        }
    }

    /// Whether two cells of equal dimension >= 1 share a face, under the
    /// given adjacency mode.
    pub fn lower_adjacent(&self, a: &CellId, b: &CellId, mode: AdjacencyMode) -> Result<bool> {
        let (ia, ib) = (self.index_of(a)?, self.index_of(b)?);
        if self.dim(ia) != self.dim(ib) || self.dim(ia) == 0 {
            return Err(Error::DimensionMismatch(a.clone(), b.clone()));
        }
        Ok(self.lower_adjacent_ix(ia, ib, mode))
    }

    /// Whether `face` is a face of `cell` of any codimension.
    pub(crate) fn is_iterated_face_ix(&self, face: usize, cell: usize) -> bool {
        if self.dim(face) >= self.dim(cell) {
            return false;
        }
        self.closure_ix(cell).contains(&face)
    }

    /// The classical GF(2) boundary matrix in degree `k`: rows are
    /// (k-1)-cells, columns are k-cells, entry 1 iff the row cell is a face
    /// of the column cell.
    pub fn boundary_matrix_gf2(&self, k: usize) -> Result<Gf2Matrix> {
        if k == 0 || k as isize > self.max_dim {
            return Err(Error::DegreeOutOfRange {
                got: k,
                max: self.max_dim,
            });
        }
        let rows = self.cells_of_dim(k - 1);
        let cols = self.cells_of_dim(k);
        let row_pos: HashMap<usize, usize> = rows.iter().enumerate().map(|(p, &ix)| (ix, p)).collect();
        let mut m = Gf2Matrix::zeros(
            rows.len(),
            cols.len(),
            rows.iter().map(|&ix| self.id(ix).0.clone()).collect(),
            cols.iter().map(|&ix| self.id(ix).0.clone()).collect(),
        );
        for (cpos, &cix) in cols.iter().enumerate() {
            for &f in self.faces_ix(cix) {
                m.set(row_pos[&f], cpos, true);
            }
        }
        Ok(m)
    }

    /// Cells with no cofaces, in canonical order. Re-emitting these as
    /// `simplex` lines regenerates a simplicial complex exactly.
    pub fn maximal_cells(&self) -> Vec<&CellId> {
        self.cells
            .iter()
            .filter(|c| c.cofaces.is_empty())
            .map(|c| &c.id)
            .collect()
    }

    /// Serialize the complex back to fixture directives.
    pub fn to_fixture_text(&self) -> String {
        let mut out = String::new();
        match self.mode {
            ComplexMode::Simplicial => {
                for c in &self.cells {
                    if c.cofaces.is_empty() {
                        let verts: Vec<String> = c
                            .vertices
                            .as_ref()
                            .unwrap()
                            .iter()
                            .map(|v| v.to_string())
                            .collect();
                        out.push_str(&format!("simplex {}\n", verts.join(" ")));
                    }
                }
            }
            ComplexMode::Cw => {
                for c in &self.cells {
                    if c.dim == 0 {
                        out.push_str(&format!("cell {} 0 faces:\n", c.id));
                    } else {
                        let faces: Vec<&str> =
                            c.faces.iter().map(|&f| self.cells[f].id.as_str()).collect();
                        out.push_str(&format!("cell {} {} faces: {}\n", c.id, c.dim, faces.join(" ")));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_closure_has_seven_cells() {
        let cx = parse_complex("simplex 0 1 2\n").unwrap();
        assert_eq!(cx.len(), 7);
        assert_eq!(cx.max_dim(), 2);
        assert_eq!(cx.mode(), ComplexMode::Simplicial);
        let faces = cx.faces(&"0.1.2".into()).unwrap();
        let expect: BTreeSet<CellId> = ["0.1", "0.2", "1.2"].iter().map(|&s| s.into()).collect();
        assert_eq!(faces, expect);
    }

    #[test]
    fn empty_text_gives_empty_complex() {
        let cx = parse_complex("").unwrap();
        assert!(cx.is_empty());
        assert_eq!(cx.max_dim(), -1);
    }

    #[test]
    fn explicit_square_cell() {
        let text = "\
cell a 0\ncell b 0\ncell c 0\ncell d 0
cell e1 1 faces: a b
cell e2 1 faces: b c
cell e3 1 faces: c d
cell e4 1 faces: a d
cell sq 2 faces: e1 e2 e3 e4
";
        let cx = parse_complex(text).unwrap();
        assert_eq!(cx.mode(), ComplexMode::Cw);
        assert_eq!(cx.faces(&"sq".into()).unwrap().len(), 4);
        // Euler count for a square disk: 4 - 4 + 1 = 1.
        let euler = cx.cells_of_dim(0).len() as i64 - cx.cells_of_dim(1).len() as i64
            + cx.cells_of_dim(2).len() as i64;
        assert_eq!(euler, 1);
    }

    #[test]
    fn dangling_face_rejected() {
        let err = parse_complex("cell e 1 faces: a b\ncell a 0\n").unwrap_err();
        assert!(matches!(err, ParseError::DanglingFace { .. }));
    }

    #[test]
    fn repeated_face_rejected_as_irregular() {
        let err = parse_complex("cell a 0\ncell e 1 faces: a a\n").unwrap_err();
        assert!(matches!(err, ParseError::IrregularFace { .. }));
    }

    #[test]
    fn face_dimension_checked() {
        let err = parse_complex("cell a 0\ncell f 2 faces: a\n").unwrap_err();
        assert!(matches!(err, ParseError::FaceDimensionMismatch { .. }));
    }

    #[test]
    fn tetrahedron_boundary_queries() {
        let cx = parse_complex(crate::fixtures::TETRAHEDRON).unwrap();
        assert_eq!(cx.len(), 14);
        let cof = cx.cofaces(&"0".into()).unwrap();
        let expect: BTreeSet<CellId> = ["0.1", "0.2", "0.3"].iter().map(|&s| s.into()).collect();
        assert_eq!(cof, expect);
        assert!(cx.faces(&"0".into()).unwrap().is_empty());
        assert!(cx
            .lower_adjacent(&"0.1.3".into(), &"1.2.3".into(), AdjacencyMode::Codim1)
            .unwrap());
        assert!(cx
            .lower_adjacent(&"0.1.2".into(), &"0.1.3".into(), AdjacencyMode::Codim1)
            .unwrap());
        assert!(!cx
            .lower_adjacent(&"0.1".into(), &"2.3".into(), AdjacencyMode::Codim1)
            .unwrap());
        assert!(cx
            .lower_adjacent(&"0.1".into(), &"2.3".into(), AdjacencyMode::AnyFace)
            .map(|b| !b)
            .unwrap());
    }

    #[test]
    fn simplex_facet_count_matches_dimension() {
        let cx = parse_complex("simplex 0 1 2 3 4\n").unwrap();
        for ix in cx.all_cells() {
            let d = cx.dim(ix);
            if d > 0 {
                assert_eq!(cx.faces_ix(ix).len(), d + 1);
            } else {
                assert!(cx.faces_ix(ix).is_empty());
            }
        }
    }

    #[test]
    fn boundary_matrices_square_to_zero() {
        let cx = parse_complex(crate::fixtures::TETRAHEDRON).unwrap();
        let d1 = cx.boundary_matrix_gf2(1).unwrap();
        let d2 = cx.boundary_matrix_gf2(2).unwrap();
        assert!(crate::homology::compose_is_zero(&d1, &d2).unwrap());
        assert_eq!(d1.rank(), 3);
        // A triangle column has exactly three ones.
        let tri = parse_complex("simplex 0 1 2\n").unwrap();
        let b2 = tri.boundary_matrix_gf2(2).unwrap();
        assert_eq!(b2.column_weight(0), 3);
        assert!(cx.boundary_matrix_gf2(3).is_err());
        assert!(cx.boundary_matrix_gf2(0).is_err());
    }

    #[test]
    fn canonical_order_is_deterministic() {
        let a = parse_complex("simplex 0 1 2\nsimplex 1 2 3\n").unwrap();
        let b = parse_complex("simplex 1 2 3\nsimplex 0 1 2\n").unwrap();
        let ids_a: Vec<&CellId> = a.all_cells().map(|ix| a.id(ix)).collect();
        let ids_b: Vec<&CellId> = b.all_cells().map(|ix| b.id(ix)).collect();
        assert_eq!(ids_a, ids_b);
        assert_eq!(
            a.boundary_matrix_gf2(1).unwrap(),
            b.boundary_matrix_gf2(1).unwrap()
        );
    }
}
