//! Line scanner for the fixture grammar.
//!
//! Fixture files are UTF-8 and line based. `#` starts a comment that runs to
//! the end of the line. Three directives exist:
//!
//! ```text
//! simplex v0 v1 ... vk          # vertices are non-negative integers
//! cell <name> <dim> faces: <id> <id> ...
//! match <tail-id> <head-id>
//! ```
//!
//! Directives may appear in any order; closure and validation happen after
//! the whole file has been read.

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Directive {
    Simplex {
        line: usize,
        vertices: Vec<u32>,
    },
    Cell {
        line: usize,
        name: String,
        dim: usize,
        faces: Vec<String>,
    },
    Match {
        line: usize,
        tail: String,
        head: String,
    },
}

pub fn scan(text: &str) -> Result<Vec<Directive>, ParseError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut words = content.split_whitespace();
        let Some(keyword) = words.next() else {
            continue;
        };
        match keyword {
            "simplex" => {
                let mut vertices = Vec::new();
                for w in words {
                    let v = w.parse::<u32>().map_err(|_| ParseError::Syntax {
                        line,
                        message: format!("`{w}` is not a non-negative integer vertex"),
                    })?;
                    vertices.push(v);
                }
                if vertices.is_empty() {
                    return Err(ParseError::Syntax {
                        line,
                        message: "simplex needs at least one vertex".into(),
                    });
                }
                vertices.sort_unstable();
                if vertices.windows(2).any(|w| w[0] == w[1]) {
                    return Err(ParseError::Syntax {
                        line,
                        message: "simplex vertices must be distinct".into(),
                    });
                }
                out.push(Directive::Simplex { line, vertices });
            }
            "cell" => {
                let Some(name) = words.next() else {
                    return Err(ParseError::Syntax {
                        line,
                        message: "cell needs a name".into(),
                    });
                };
                let Some(dim_word) = words.next() else {
                    return Err(ParseError::Syntax {
                        line,
                        message: "cell needs a dimension".into(),
                    });
                };
                let dim = dim_word.parse::<usize>().map_err(|_| ParseError::Syntax {
                    line,
                    message: format!("`{dim_word}` is not a dimension"),
                })?;
                match words.next() {
                    Some("faces:") => {}
                    Some(other) => {
                        return Err(ParseError::Syntax {
                            line,
                            message: format!("expected `faces:`, found `{other}`"),
                        })
                    }
                    None if dim == 0 => {}
                    None => {
                        return Err(ParseError::Syntax {
                            line,
                            message: "cell of positive dimension needs `faces:`".into(),
                        })
                    }
                }
                let faces: Vec<String> = words.map(|w| w.to_string()).collect();
                if dim == 0 && !faces.is_empty() {
                    return Err(ParseError::Syntax {
                        line,
                        message: "a 0-cell has no faces".into(),
                    });
                }
                if dim > 0 && faces.is_empty() {
                    return Err(ParseError::Syntax {
                        line,
                        message: "a positive-dimensional cell needs at least one face".into(),
                    });
                }
                out.push(Directive::Cell {
                    line,
                    name: name.to_string(),
                    dim,
                    faces,
                });
            }
            "match" => {
                let (Some(tail), Some(head)) = (words.next(), words.next()) else {
                    return Err(ParseError::Syntax {
                        line,
                        message: "match needs a tail id and a head id".into(),
                    });
                };
                if words.next().is_some() {
                    return Err(ParseError::Syntax {
                        line,
                        message: "match takes exactly two ids".into(),
                    });
                }
                out.push(Directive::Match {
                    line,
                    tail: tail.to_string(),
                    head: head.to_string(),
                });
            }
            other => {
                return Err(ParseError::Syntax {
                    line,
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scans_all_directive_kinds() {
        let text = "# comment\nsimplex 2 0 1\ncell sq 2 faces: e1 e2 e3 e4\nmatch 0 0.1\n";
        let ds = scan(text).unwrap();
        assert_eq!(ds.len(), 3);
        assert_eq!(
            ds[0],
            Directive::Simplex {
                line: 2,
                vertices: vec![0, 1, 2]
            }
        );
        match &ds[1] {
            Directive::Cell { name, dim, faces, .. } => {
                assert_eq!(name, "sq");
                assert_eq!(*dim, 2);
                assert_eq!(faces.len(), 4);
            }
            _ => panic!("expected cell"),
        }
    }

    #[test]
    fn vertex_cell_may_omit_faces_marker() {
        let ds = scan("cell a 0\ncell b 0 faces:\n").unwrap();
        assert_eq!(ds.len(), 2);
    }

    #[test]
    fn reports_line_numbers() {
        let err = scan("simplex 0 1\nsimplex x\n").unwrap_err();
        match err {
            ParseError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_repeated_vertices() {
        assert!(scan("simplex 1 1\n").is_err());
    }
}
