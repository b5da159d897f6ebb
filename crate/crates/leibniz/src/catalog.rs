//! The built-in catalog: sl2, its semidirect products with irreducible
//! modules, and direct sums thereof, all with Cartan data supplied so root
//! and weight decompositions never have to be computed from scratch.

use crate::algebra::{Element, StructureTable};
use crate::deriv::{symbolic_generators, DerivationSpace};
use crate::error::{Error, Result};
use crate::linalg::{rat, MatrixQ, Rat, Subspace};
use crate::repr::{
    probe_points, root_decomposition, semidirect, sl2_irreducible, weight_decomposition, Probe,
    RootDatum, SemidirectLayout, WeightDatum,
};
use num_traits::Zero;

/// sl2 in the Chevalley basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
pub fn sl2_table() -> StructureTable {
    let labels = vec!["e".to_string(), "f".to_string(), "h".to_string()];
    let mut constants = vec![Rat::zero(); 27];
    let mut set = |i: usize, j: usize, k: usize, v: i64| {
        constants[(i * 3 + j) * 3 + k] = rat(v);
    };
    set(0, 1, 2, 1); // [e,f] = h
    set(1, 0, 2, -1);
    set(2, 0, 0, 2); // [h,e] = 2e
    set(0, 2, 0, -2);
    set(2, 1, 1, -2); // [h,f] = -2f
    set(1, 2, 1, 2);
    StructureTable::new("sl2", labels, constants).expect("static table")
}

pub fn sl2_cartan_indices() -> Vec<usize> {
    vec![2]
}

pub fn sl2_simple_roots() -> Vec<Vec<i64>> {
    vec![vec![2]]
}

/// One indecomposable summand of a catalog algebra, with its position inside
/// the full table and its precomputed root and weight data.
#[derive(Clone, Debug)]
pub struct CatalogComponent {
    pub offset: usize,
    pub layout: SemidirectLayout,
    pub root_datum: RootDatum,
    pub weight_data: Vec<WeightDatum>,
}

/// A fully constructed catalog algebra: the table plus per-summand layout
/// data, which is everything the derivation engine and probe generator need.
#[derive(Clone, Debug)]
pub struct CatalogAlgebra {
    pub name: String,
    pub table: StructureTable,
    pub components: Vec<CatalogComponent>,
}

impl CatalogAlgebra {
    /// Structured probes of every summand, embedded into the full table.
    pub fn probes(&self) -> Result<Vec<Probe>> {
        let dim = self.table.dim();
        let mut out = Vec::new();
        for c in &self.components {
            for p in probe_points(&c.layout, &c.root_datum, &c.weight_data)? {
                let mut coords = vec![Rat::zero(); dim];
                coords[c.offset..c.offset + p.element.dim()].clone_from_slice(&p.element.coords);
                out.push(Probe {
                    element: Element::from_coords(coords),
                    tag: p.tag,
                });
            }
        }
        Ok(out)
    }

    /// Symbolic derivation space: the per-summand symbolic generators,
    /// embedded block-diagonally (Der of a direct sum is the direct sum of
    /// the Der's for non-isomorphic semisimple summands).
    pub fn symbolic_derivation_space(&self) -> Result<DerivationSpace> {
        let dim = self.table.dim();
        let mut gens: Vec<Vec<Rat>> = Vec::new();
        for c in &self.components {
            let cd = c.layout.table.dim();
            for g in symbolic_generators(&c.layout)? {
                let mut m = MatrixQ::zeros(dim, dim);
                for r in 0..cd {
                    for col in 0..cd {
                        let v = g.at(r, col);
                        if !v.is_zero() {
                            *m.at_mut(c.offset + r, c.offset + col) = v.clone();
                        }
                    }
                }
                gens.push(m.flatten());
            }
        }
        Ok(DerivationSpace {
            algebra_dim: dim,
            space: Subspace::from_generators(dim * dim, gens),
        })
    }

    /// The span of all module blocks inside the full table.
    pub fn v_block(&self) -> Subspace {
        let dim = self.table.dim();
        let mut gens = Vec::new();
        for c in &self.components {
            for r in &c.layout.v_ranges {
                for i in r.clone() {
                    gens.push(Element::basis(dim, c.offset + i).coords);
                }
            }
        }
        Subspace::from_generators(dim, gens)
    }

    /// Total dimension of the semisimple parts (= expected liezation dim).
    pub fn lie_dim(&self) -> usize {
        self.components.iter().map(|c| c.layout.lie.dim()).sum()
    }
}

/// The published catalog names.
pub fn catalog_names() -> Vec<String> {
    let mut names = vec!["sl2".to_string()];
    for m in 1..=6 {
        names.push(format!("sl2xV({m})"));
    }
    names.push("sl2xV(2)+V(2)".to_string());
    names.push("sl2xV(2)+V(4)".to_string());
    names.push("sum[sl2xV(2),sl2xV(4)]".to_string());
    names
}

fn build_component(module_weights: &[u32]) -> Result<CatalogComponent> {
    let s = sl2_table();
    let mods = module_weights
        .iter()
        .map(|&m| sl2_irreducible(&s, m))
        .collect::<Result<Vec<_>>>()?;
    let layout = semidirect(&s, &mods)?;
    let root_datum = root_decomposition(&s, &sl2_cartan_indices(), sl2_simple_roots())?;
    let weight_data = layout
        .modules
        .iter()
        .map(|m| weight_decomposition(m, &root_datum))
        .collect::<Result<Vec<_>>>()?;
    Ok(CatalogComponent {
        offset: 0,
        layout,
        root_datum,
        weight_data,
    })
}

fn parse_summand(name: &str) -> Option<Vec<u32>> {
    // "sl2" or "sl2xV(a)+V(b)+..."
    if name == "sl2" {
        return Some(vec![]);
    }
    let rest = name.strip_prefix("sl2x")?;
    let mut ms = Vec::new();
    for part in rest.split('+') {
        let inner = part.strip_prefix("V(")?.strip_suffix(')')?;
        ms.push(inner.parse().ok()?);
    }
    Some(ms)
}

/// Deterministic construction of a published catalog algebra.
pub fn catalog(name: &str) -> Result<CatalogAlgebra> {
    if !catalog_names().iter().any(|n| n == name) {
        return Err(Error::UnknownCatalogName(name.to_string()));
    }
    if let Some(inner) = name.strip_prefix("sum[").and_then(|s| s.strip_suffix(']')) {
        let mut components = Vec::new();
        let mut table: Option<StructureTable> = None;
        for part in inner.split(',') {
            let ms = parse_summand(part).ok_or_else(|| {
                Error::UnknownCatalogName(name.to_string())
            })?;
            let mut c = build_component(&ms)?;
            let (offset, next) = match table {
                None => (0, c.layout.table.clone()),
                Some(t) => (t.dim(), t.direct_sum(&c.layout.table)),
            };
            c.offset = offset;
            table = Some(next);
            components.push(c);
        }
        let mut table = table.expect("at least one summand");
        table.set_name(name);
        Ok(CatalogAlgebra {
            name: name.to_string(),
            table,
            components,
        })
    } else {
        let ms = parse_summand(name).ok_or_else(|| Error::UnknownCatalogName(name.to_string()))?;
        let c = build_component(&ms)?;
        let mut table = c.layout.table.clone();
        table.set_name(name);
        Ok(CatalogAlgebra {
            name: name.to_string(),
            table,
            components: vec![c],
        })
    }
}
