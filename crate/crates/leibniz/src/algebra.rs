//! Finite-dimensional algebras given by structure constants.
//!
//! Convention: right Leibniz throughout. The defining identity is
//! `[x,[y,z]] = [[x,y],z] - [[x,z],y]`, and modules act on the right.

use crate::error::{Error, Result};
use crate::linalg::{vec_is_zero, MatrixQ, Rat, RrefBuilder, Subspace};
use num_traits::Zero;

/// An algebra presented by rational structure constants:
/// `[b_i, b_j] = sum_k c[i][j][k] b_k`.
#[derive(Clone, PartialEq, Debug)]
pub struct StructureTable {
    name: String,
    dim: usize,
    basis_labels: Vec<String>,
    /// Dense, index (i*dim + j)*dim + k.
    constants: Vec<Rat>,
}

/// A vector of the algebra in the coordinates of its table's basis.
#[derive(Clone, PartialEq, Debug)]
pub struct Element {
    pub coords: Vec<Rat>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coords: vec![Rat::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coords[i] = Rat::from_integer(1.into());
        e
    }

    pub fn from_coords(coords: Vec<Rat>) -> Self {
        Element { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Result of the Leibniz identity check over all basis triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizReport {
    pub holds: bool,
    /// Lexicographically first violating basis triple, 0-based.
    pub first_violation: Option<(usize, usize, usize)>,
}

impl StructureTable {
    pub fn new(
        name: impl Into<String>,
        basis_labels: Vec<String>,
        constants: Vec<Rat>,
    ) -> Result<Self> {
        let dim = basis_labels.len();
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                context: "structure constants",
                expected: dim * dim * dim,
                found: constants.len(),
            });
        }
        Ok(StructureTable {
            name: name.into(),
            dim,
            basis_labels,
            constants,
        })
    }

    pub fn zero_algebra(name: impl Into<String>, dim: usize) -> Self {
        StructureTable {
            name: name.into(),
            dim,
            basis_labels: (1..=dim).map(|i| format!("b{i}")).collect(),
            constants: vec![Rat::zero(); dim * dim * dim],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn c_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Rat {
        &mut self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Bracket of basis elements as a coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rat> {
        let base = (i * self.dim + j) * self.dim;
        self.constants[base..base + self.dim].to_vec()
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        if x.dim() != self.dim || y.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "bracket operands",
                expected: self.dim,
                found: if x.dim() != self.dim { x.dim() } else { y.dim() },
            });
        }
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y.coords[j].is_zero() {
                    continue;
                }
                let f = &x.coords[i] * &y.coords[j];
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] += &f * c;
                    }
                }
            }
        }
        Ok(Element::from_coords(out))
    }

    fn bracket_coords(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        self.bracket(
            &Element::from_coords(x.to_vec()),
            &Element::from_coords(y.to_vec()),
        )
        .expect("conforming coords")
        .coords
    }

    /// Checks `[b_i,[b_j,b_k]] - [[b_i,b_j],b_k] + [[b_i,b_k],b_j] = 0` on all
    /// basis triples; sufficient by trilinearity.
    pub fn check_right_leibniz(&self) -> LeibnizReport {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let bjk = self.basis_bracket(j, k);
                    let bij = self.basis_bracket(i, j);
                    let bik = self.basis_bracket(i, k);
                    let bi = Element::basis(self.dim, i).coords;
                    let bj = Element::basis(self.dim, j).coords;
                    let bk = Element::basis(self.dim, k).coords;
                    let lhs = self.bracket_coords(&bi, &bjk);
                    let r1 = self.bracket_coords(&bij, &bk);
                    let r2 = self.bracket_coords(&bik, &bj);
                    let residual: Vec<Rat> = lhs
                        .iter()
                        .zip(r1.iter().zip(&r2))
                        .map(|(l, (a, b))| l - a + b)
                        .collect();
                    if !vec_is_zero(&residual) {
                        return LeibnizReport {
                            holds: false,
                            first_violation: Some((i, j, k)),
                        };
                    }
                }
            }
        }
        LeibnizReport {
            holds: true,
            first_violation: None,
        }
    }

    /// Antisymmetry plus Jacobi on basis triples.
    pub fn is_lie(&self) -> bool {
        for i in 0..self.dim {
            for k in 0..self.dim {
                if !self.c(i, i, k).is_zero() {
                    return false;
                }
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if self.c(i, j, k) != &(-self.c(j, i, k).clone()) {
                        return false;
                    }
                }
            }
        }
        // With antisymmetry, Jacobi is equivalent to the right Leibniz identity.
        self.check_right_leibniz().holds
    }

    /// The squares ideal I = span{[x,x]}, computed by polarization as the
    /// span of `[b_i,b_j] + [b_j,b_i]` over i <= j. Verifies [L, I] = 0 and
    /// fails if that does not hold exactly.
    pub fn squares_ideal(&self) -> Result<Subspace> {
        let mut gens = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                let a = self.basis_bracket(i, j);
                let b = self.basis_bracket(j, i);
                gens.push(a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<Rat>>());
            }
        }
        let ideal = Subspace::from_generators(self.dim, gens);
        for i in 0..self.dim {
            let bi = Element::basis(self.dim, i).coords;
            for row in ideal.basis_rows() {
                let prod = self.bracket_coords(&bi, row);
                if !vec_is_zero(&prod) {
                    return Err(Error::SquaresNotAnnihilated);
                }
            }
        }
        Ok(ideal)
    }

    /// Quotient L/I on the complement basis given by the non-pivot columns
    /// of I's RREF basis; the result is a Lie algebra for Leibniz input.
    pub fn liezation(&self) -> Result<StructureTable> {
        let ideal = self.squares_ideal()?;
        let pivots = ideal.pivot_columns();
        let complement: Vec<usize> = (0..self.dim).filter(|i| !pivots.contains(i)).collect();
        let qdim = complement.len();
        let mut builder = RrefBuilder::new(self.dim);
        for row in ideal.basis_rows() {
            builder.insert(row.to_vec());
        }
        let reduce_mod_ideal = |v: Vec<Rat>| -> Vec<Rat> {
            let r = builder.reduce(v);
            // After reduction the pivot coordinates of I are zero.
            complement.iter().map(|&i| r[i].clone()).collect()
        };
        let mut constants = vec![Rat::zero(); qdim * qdim * qdim];
        for (pi, &i) in complement.iter().enumerate() {
            for (pj, &j) in complement.iter().enumerate() {
                let w = reduce_mod_ideal(self.basis_bracket(i, j));
                for (k, val) in w.into_iter().enumerate() {
                    constants[(pi * qdim + pj) * qdim + k] = val;
                }
            }
        }
        StructureTable::new(
            format!("{}/I", self.name),
            complement
                .iter()
                .map(|&i| self.basis_labels[i].clone())
                .collect(),
            constants,
        )
    }

    /// Block-diagonal sum; cross brackets are zero.
    pub fn direct_sum(&self, other: &StructureTable) -> StructureTable {
        let dim = self.dim + other.dim;
        let mut labels = Vec::with_capacity(dim);
        for l in &self.basis_labels {
            labels.push(format!("a.{l}"));
        }
        for l in &other.basis_labels {
            labels.push(format!("b.{l}"));
        }
        let mut t = StructureTable {
            name: format!("{}(+){}", self.name, other.name),
            dim,
            basis_labels: labels,
            constants: vec![Rat::zero(); dim * dim * dim],
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    *t.c_mut(i, j, k) = self.c(i, j, k).clone();
                }
            }
        }
        let o = self.dim;
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    *t.c_mut(o + i, o + j, o + k) = other.c(i, j, k).clone();
                }
            }
        }
        t
    }

    /// Matrix of the right multiplication x -> [x, a] on coordinate columns.
    pub fn right_mult_operator(&self, a: &Element) -> Result<MatrixQ> {
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "right multiplication operand",
                expected: self.dim,
                found: a.dim(),
            });
        }
        let mut m = MatrixQ::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                if a.coords[j].is_zero() {
                    continue;
                }
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *m.at_mut(k, i) += &a.coords[j] * c;
                    }
                }
            }
        }
        Ok(m)
    }
}
