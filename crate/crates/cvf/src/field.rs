//! Combinatorial vector fields: a matching that pairs a cell with at most
//! one coface of dimension one higher.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::complex::{CellComplex, CellId};
use crate::error::{ParseError, Result};
use crate::parse::{self, Directive};

/// Role of a cell under the matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Role {
    Head,
    Tail,
    Rest,
}

/// A combinatorial vector field over a shared complex.
#[derive(Debug, Clone)]
pub struct VectorField {
    complex: Arc<CellComplex>,
    /// tail index -> head index
    head_of: Vec<Option<usize>>,
    /// head index -> tail index
    tail_of: Vec<Option<usize>>,
}

/// One violated matching clause with the offending cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: String,
    pub cells: Vec<CellId>,
}

/// Outcome of checking the matching clauses. Violations are data, not
/// errors, so a fixture author sees every problem at once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Read the `match` lines of fixture text against an existing complex.
/// The matching clauses are not enforced here; run [`VectorField::validate`]
/// for that.
pub fn parse_field(complex: Arc<CellComplex>, text: &str) -> Result<VectorField, ParseError> {
    let directives = parse::scan(text)?;
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for d in &directives {
        if let Directive::Match { line, tail, head } = d {
            let t = complex
                .index_of(&CellId(tail.clone()))
                .map_err(|_| ParseError::UnknownCell {
                    line: *line,
                    id: tail.clone(),
                })?;
            let h = complex
                .index_of(&CellId(head.clone()))
                .map_err(|_| ParseError::UnknownCell {
                    line: *line,
                    id: head.clone(),
                })?;
            pairs.push((*line, t, h));
        }
    }
    let mut head_of: Vec<Option<usize>> = vec![None; complex.len()];
    let mut tail_of: Vec<Option<usize>> = vec![None; complex.len()];
    for (line, t, h) in pairs {
        if head_of[t].is_some() {
            return Err(ParseError::DuplicateTail {
                line,
                id: complex.id(t).0.clone(),
            });
        }
        head_of[t] = Some(h);
        if tail_of[h].is_none() {
            tail_of[h] = Some(t);
        }
        // A head with several tails is kept; validation reports it.
    }
    Ok(VectorField {
        complex,
        head_of,
        tail_of,
    })
}

/// Parse a whole fixture: complex directives and match lines together.
pub fn parse_fixture(text: &str) -> Result<(Arc<CellComplex>, VectorField), ParseError> {
    let complex = Arc::new(crate::complex::parse_complex(text)?);
    let field = parse_field(Arc::clone(&complex), text)?;
    Ok((complex, field))
}

impl VectorField {
    /// Build a field directly from (tail, head) pairs. Face relations are
    /// not enforced; validation is explicit, as with parsing.
    pub fn from_pairs(complex: Arc<CellComplex>, pairs: &[(CellId, CellId)]) -> Result<VectorField> {
        let mut head_of: Vec<Option<usize>> = vec![None; complex.len()];
        let mut tail_of: Vec<Option<usize>> = vec![None; complex.len()];
        for (tail, head) in pairs {
            let t = complex.index_of(tail)?;
            let h = complex.index_of(head)?;
            head_of[t] = Some(h);
            if tail_of[h].is_none() {
                tail_of[h] = Some(t);
            }
        }
        Ok(VectorField {
            complex,
            head_of,
            tail_of,
        })
    }

    pub(crate) fn from_pairs_ix(complex: Arc<CellComplex>, pairs: &[(usize, usize)]) -> VectorField {
        let mut head_of: Vec<Option<usize>> = vec![None; complex.len()];
        let mut tail_of: Vec<Option<usize>> = vec![None; complex.len()];
        for &(t, h) in pairs {
            head_of[t] = Some(h);
            tail_of[h] = Some(t);
        }
        VectorField {
            complex,
            head_of,
            tail_of,
        }
    }

    pub fn complex(&self) -> &Arc<CellComplex> {
        &self.complex
    }

    /// The matched coface of a tail, if any.
    pub(crate) fn head_of(&self, ix: usize) -> Option<usize> {
        self.head_of[ix]
    }

    pub(crate) fn tail_of(&self, ix: usize) -> Option<usize> {
        self.tail_of[ix]
    }

    pub fn role(&self, ix: usize) -> Role {
        if self.head_of[ix].is_some() {
            Role::Tail
        } else if self.tail_of[ix].is_some() {
            Role::Head
        } else {
            Role::Rest
        }
    }

    /// Matched pairs as (tail, head) canonical indices, tail-ascending.
    pub(crate) fn pairs_ix(&self) -> Vec<(usize, usize)> {
        self.head_of
            .iter()
            .enumerate()
            .filter_map(|(t, h)| h.map(|h| (t, h)))
            .collect()
    }

    /// Matched pairs as cell ids, in canonical tail order.
    pub fn pairs(&self) -> Vec<(CellId, CellId)> {
        self.pairs_ix()
            .into_iter()
            .map(|(t, h)| (self.complex.id(t).clone(), self.complex.id(h).clone()))
            .collect()
    }

    pub fn pair_count(&self) -> usize {
        self.head_of.iter().filter(|h| h.is_some()).count()
    }

    /// Check every matching clause and collect the violations.
    pub fn validate(&self) -> ValidationReport {
        let cx = &self.complex;
        let mut violations = Vec::new();
        for (t, h) in self.pairs_ix() {
            // The stored face lists only contain regular codimension-1
            // faces, so membership also settles the dimension clause.
            if !cx.faces_ix(h).contains(&t) {
                violations.push(Violation {
                    clause: "tail-not-a-face-of-head".into(),
                    cells: vec![cx.id(t).clone(), cx.id(h).clone()],
                });
            }
        }
        for ix in cx.all_cells() {
            if self.head_of[ix].is_some() && self.tail_of[ix].is_some() {
                violations.push(Violation {
                    clause: "head-also-tail".into(),
                    cells: vec![cx.id(ix).clone()],
                });
            }
        }
        let mut preimages: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (t, h) in self.pairs_ix() {
            preimages.entry(h).or_default().push(t);
        }
        for (h, tails) in preimages {
            if tails.len() > 1 {
                let mut cells = vec![cx.id(h).clone()];
                cells.extend(tails.iter().map(|&t| cx.id(t).clone()));
                violations.push(Violation {
                    clause: "head-with-multiple-tails".into(),
                    cells,
                });
            }
        }
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    /// Unmatched cells of dimension `k`, in canonical order. The index of a
    /// rest cell equals its dimension.
    pub fn rest_points(&self, k: usize) -> Vec<CellId> {
        self.complex
            .cells_of_dim(k)
            .into_iter()
            .filter(|&ix| self.role(ix) == Role::Rest)
            .map(|ix| self.complex.id(ix).clone())
            .collect()
    }

    pub(crate) fn rest_points_ix(&self, k: usize) -> Vec<usize> {
        self.complex
            .cells_of_dim(k)
            .into_iter()
            .filter(|&ix| self.role(ix) == Role::Rest)
            .collect()
    }

    /// Rest-cell counts per dimension, indices 0..=max_dim.
    pub fn rest_census(&self) -> Vec<usize> {
        let m = self.complex.max_dim();
        if m < 0 {
            return Vec::new();
        }
        (0..=m as usize).map(|k| self.rest_points_ix(k).len()).collect()
    }

    /// Serialize the field's match lines in canonical tail order.
    pub fn to_match_lines(&self) -> String {
        let mut out = String::new();
        for (t, h) in self.pairs_ix() {
            out.push_str(&format!("match {} {}\n", self.complex.id(t), self.complex.id(h)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::parse_complex;

    fn triangle() -> Arc<CellComplex> {
        Arc::new(parse_complex("simplex 0 1 2\n").unwrap())
    }

    #[test]
    fn parses_single_match() {
        let cx = triangle();
        let f = parse_field(Arc::clone(&cx), "match 0 0.1\n").unwrap();
        let t = cx.index_of(&"0".into()).unwrap();
        let h = cx.index_of(&"0.1".into()).unwrap();
        assert_eq!(f.head_of(t), Some(h));
        assert_eq!(f.role(t), Role::Tail);
        assert_eq!(f.role(h), Role::Head);
    }

    #[test]
    fn zero_field_has_all_rest_points() {
        let cx = triangle();
        let f = parse_field(Arc::clone(&cx), "").unwrap();
        assert_eq!(f.rest_points(1).len(), 3);
        assert_eq!(
            f.rest_points(1),
            vec!["0.1".into(), "0.2".into(), "1.2".into()]
        );
        assert!(f.validate().valid);
    }

    #[test]
    fn duplicate_tail_is_a_parse_error() {
        let cx = triangle();
        let err = parse_field(cx, "match 0 0.1\nmatch 0 0.2\n").unwrap_err();
        assert!(matches!(err, ParseError::DuplicateTail { .. }));
    }

    #[test]
    fn two_tails_one_head_reported() {
        let cx = triangle();
        let f = parse_field(cx, "match 0 0.1\nmatch 1 0.1\n").unwrap();
        let report = f.validate();
        assert!(!report.valid);
        assert!(report
            .violations
            .iter()
            .any(|v| v.clause == "head-with-multiple-tails"));
    }

    #[test]
    fn head_also_tail_reported() {
        let cx = triangle();
        let f = parse_field(cx, "match 0 0.1\nmatch 0.1 0.1.2\n").unwrap();
        let report = f.validate();
        assert!(!report.valid);
        assert!(report.violations.iter().any(|v| v.clause == "head-also-tail"));
    }

    #[test]
    fn non_face_pair_reported() {
        let cx = triangle();
        let f = parse_field(cx, "match 0 1.2\n").unwrap();
        let report = f.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.clause == "tail-not-a-face-of-head"));
    }

    #[test]
    fn validation_is_idempotent() {
        let cx = triangle();
        let f = parse_field(cx, "match 0 0.1\nmatch 1 0.1\n").unwrap();
        assert_eq!(f.validate(), f.validate());
    }

    #[test]
    fn tetrahedron_field_is_valid_with_expected_rest_points() {
        let (_, f) = parse_fixture(crate::fixtures::TETRAHEDRON).unwrap();
        assert!(f.validate().valid);
        assert_eq!(f.rest_points(0), vec!["3".into()]);
        assert!(f.rest_points(1).is_empty());
        assert_eq!(f.rest_points(2), vec!["0.1.2".into()]);
    }

    #[test]
    fn roles_partition_the_cells() {
        let (cx, f) = parse_fixture(crate::fixtures::TETRAHEDRON).unwrap();
        let mut heads = 0;
        let mut tails = 0;
        let mut rest = 0;
        for ix in cx.all_cells() {
            match f.role(ix) {
                Role::Head => heads += 1,
                Role::Tail => tails += 1,
                Role::Rest => rest += 1,
            }
        }
        assert_eq!(heads, tails);
        assert_eq!(cx.len(), rest + 2 * f.pair_count());
    }
}
