//! Derivation spaces, computed two independent ways, and the locality
//! certificate: Der ⊆ LocalDer ⊆ (sampled upper bound), so equality of the
//! outer dimensions proves that every local derivation is a derivation.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Element, StructureTable};
use crate::error::{Error, Result};
use crate::linalg::{rat, MatrixQ, Rat, RrefBuilder, Subspace};
use crate::repr::{Probe, SemidirectLayout};
use num_traits::Zero;

/// An endomorphism of the algebra acting on coordinate columns.
pub type LinearMapOnL = MatrixQ;

/// A subspace of flattened endomorphisms (row-major, dim² coordinates) in
/// which every vector satisfies the derivation law.
#[derive(Clone, PartialEq, Debug)]
pub struct DerivationSpace {
    pub algebra_dim: usize,
    pub space: Subspace,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_maps(&self) -> impl Iterator<Item = MatrixQ> + '_ {
        let n = self.algebra_dim;
        self.space
            .basis_rows()
            .map(move |r| MatrixQ::from_flat(n, n, r.to_vec()))
    }
}

/// Exact derivation law check for one candidate map.
pub fn is_derivation(t: &StructureTable, d: &MatrixQ) -> bool {
    let n = t.dim();
    for i in 0..n {
        for j in 0..n {
            let dbr = d.mul_vec(&t.basis_bracket(i, j));
            let di = d.mul_vec(&Element::basis(n, i).coords);
            let dj = d.mul_vec(&Element::basis(n, j).coords);
            let t1 = t
                .bracket(
                    &Element::from_coords(di),
                    &Element::basis(n, j),
                )
                .expect("conforming");
            let t2 = t
                .bracket(
                    &Element::basis(n, i),
                    &Element::from_coords(dj),
                )
                .expect("conforming");
            for k in 0..n {
                if dbr[k] != &t1.coords[k] + &t2.coords[k] {
                    return false;
                }
            }
        }
    }
    true
}

/// Der(L) as the exact nullspace of the linear system
/// D[b_i,b_j] = [D b_i, b_j] + [b_i, D b_j] over all ordered basis pairs.
pub fn derivations_bruteforce(t: &StructureTable) -> DerivationSpace {
    let n = t.dim();
    let unknowns = n * n;
    let mut rows = RrefBuilder::new(unknowns);
    for i in 0..n {
        for j in 0..n {
            let cij = t.basis_bracket(i, j);
            for k in 0..n {
                // coefficient of D[a][b] in equation (i,j,k):
                //   D[b_i,b_j]_k   = sum_b c[i][j][b] D[k][b]
                // - [D b_i, b_j]_k = sum_a D[a][i] c[a][j][k]
                // - [b_i, D b_j]_k = sum_a D[a][j] c[i][a][k]
                let mut row = vec![Rat::zero(); unknowns];
                for (b, c) in cij.iter().enumerate() {
                    if !c.is_zero() {
                        row[k * n + b] += c;
                    }
                }
                for a in 0..n {
                    let c = t.c(a, j, k);
                    if !c.is_zero() {
                        row[a * n + i] -= c;
                    }
                    let c = t.c(i, a, k);
                    if !c.is_zero() {
                        row[a * n + j] -= c;
                    }
                }
                rows.insert(row);
            }
        }
    }
    let constraint = rows.into_subspace();
    // nullspace of the constraint rows
    let space = crate::linalg::nullspace(constraint.basis());
    DerivationSpace {
        algebra_dim: n,
        space,
    }
}

fn embed_block(dim: usize, block: &MatrixQ, row_off: usize, col_off: usize) -> MatrixQ {
    let mut m = MatrixQ::zeros(dim, dim);
    for r in 0..block.rows() {
        for c in 0..block.cols() {
            *m.at_mut(row_off + r, col_off + c) = block.at(r, c).clone();
        }
    }
    m
}

/// The generators of Eq.-style symbolic derivations for one semidirect
/// layout, as dim x dim maps: right multiplications R_a over an S-basis,
/// each θ_k extended by zero, each π_{i,j} extended by zero.
pub fn symbolic_generators(layout: &SemidirectLayout) -> Result<Vec<MatrixQ>> {
    let dim = layout.table.dim();
    let sdim = layout.lie.dim();
    let mut gens = Vec::new();
    for i in 0..sdim {
        let a = Element::from_coords(layout.embed_lie_vec(&Element::basis(sdim, i).coords));
        gens.push(layout.table.right_mult_operator(&a)?);
    }
    for (&k, th) in &layout.theta {
        gens.push(embed_block(
            dim,
            th,
            layout.v_ranges[k].start,
            layout.s_range.start,
        ));
    }
    for (&(i, j), p) in &layout.pi {
        gens.push(embed_block(
            dim,
            p,
            layout.v_ranges[j].start,
            layout.v_ranges[i].start,
        ));
    }
    for g in &gens {
        if !is_derivation(&layout.table, g) {
            return Err(Error::NotADerivation(layout.table.name().to_string()));
        }
    }
    Ok(gens)
}

/// Span of the symbolic generators; every spanning vector individually
/// passes the derivation law (verified, not assumed).
pub fn symbolic_derivation_basis(layout: &SemidirectLayout) -> Result<DerivationSpace> {
    let dim = layout.table.dim();
    let gens = symbolic_generators(layout)?;
    let space = Subspace::from_generators(dim * dim, gens.into_iter().map(|g| g.flatten()));
    Ok(DerivationSpace {
        algebra_dim: dim,
        space,
    })
}

/// Canonical RREF equality of two derivation spaces.
pub fn spaces_equal(a: &DerivationSpace, b: &DerivationSpace) -> bool {
    a.space == b.space
}

/// Image of the evaluation map D ↦ D(x) over the derivation space; the set
/// of values a derivation may take at x.
pub fn evaluation_image(ds: &DerivationSpace, x: &Element) -> Result<Subspace> {
    if x.dim() != ds.algebra_dim {
        return Err(Error::DimensionMismatch {
            context: "evaluation point",
            expected: ds.algebra_dim,
            found: x.dim(),
        });
    }
    let gens: Vec<Vec<Rat>> = ds.basis_maps().map(|d| d.mul_vec(&x.coords)).collect();
    Ok(Subspace::from_generators(ds.algebra_dim, gens))
}

/// The pointwise locality test from the definition: Δ(x) ∈ {D(x) : D ∈ Der}.
pub fn pointwise_local_check(delta: &MatrixQ, x: &Element, ds: &DerivationSpace) -> Result<bool> {
    let image = evaluation_image(ds, x)?;
    image.contains(&delta.mul_vec(&x.coords))
}

/// Adds, for one point x, the linear constraints "Δ(x) ∈ evaluation image"
/// to a constraint accumulator over the dim² unknowns of Δ (row-major).
fn add_point_constraints(
    acc: &mut RrefBuilder,
    ds: &DerivationSpace,
    x: &Element,
) -> Result<()> {
    let n = ds.algebra_dim;
    let image = evaluation_image(ds, x)?;
    let ann = image.annihilator();
    for f in ann.basis_rows() {
        // f(Δx) = 0  =>  sum_{a,b} f[a] x[b] Δ[a][b] = 0
        let mut row = vec![Rat::zero(); n * n];
        for (a, fa) in f.iter().enumerate() {
            if fa.is_zero() {
                continue;
            }
            for (b, xb) in x.coords.iter().enumerate() {
                if !xb.is_zero() {
                    row[a * n + b] = fa * xb;
                }
            }
        }
        acc.insert(row);
    }
    Ok(())
}

/// The subspace of all endomorphisms Δ with Δ(x) in the evaluation image at
/// every supplied point. Always contains Der; antitone in the point set.
pub fn local_upper_bound(
    _t: &StructureTable,
    ds: &DerivationSpace,
    points: &[Element],
) -> Result<Subspace> {
    let n = ds.algebra_dim;
    let mut acc = RrefBuilder::new(n * n);
    for x in points {
        add_point_constraints(&mut acc, ds, x)?;
    }
    Ok(crate::linalg::nullspace(acc.into_subspace().basis()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CertificateStatus {
    #[serde(rename = "VERIFIED")]
    Verified,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

/// The verdict object of a certificate run. VERIFIED means the sampled upper
/// bound on LocalDer has the same dimension as Der, which by the sandwich
/// Der ⊆ LocalDer ⊆ upper bound proves LocalDer = Der unconditionally;
/// randomness only affects whether equality is reached, never soundness.
#[derive(Clone, Debug, Serialize)]
pub struct LocalityCertificate {
    pub algebra_name: String,
    pub dim_der: usize,
    pub dim_upper_bound: usize,
    pub samples_used: usize,
    pub structured_probes_used: usize,
    pub seed: u64,
    pub status: CertificateStatus,
    pub sample_bound: i64,
    pub max_samples: usize,
    pub sample_schedule: Vec<usize>,
    /// Provenance tag per consumed point, probes first then samples.
    pub probe_provenance: Vec<String>,
    /// Basis of upper-bound vectors outside Der, for human inspection;
    /// present only on INCONCLUSIVE.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_basis: Option<Vec<Vec<String>>>,
}

pub struct VerifyOptions {
    pub seed: u64,
    pub max_samples: usize,
    pub bound: i64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            max_samples: 512,
            bound: 10,
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Element {
    Element::from_coords((0..dim).map(|_| rat(rng.gen_range(-bound..=bound))).collect())
}

/// Runs the certificate: brute-force Der, structured probes first, then a
/// doubling schedule of seeded integer sample points (32, 64, ... up to
/// max_samples) until the sampled upper bound matches dim Der or the cap is
/// hit. The result is deterministic in (algebra, probes, options).
pub fn verify_theorem(
    t: &StructureTable,
    probes: &[Probe],
    opts: &VerifyOptions,
) -> Result<LocalityCertificate> {
    let n = t.dim();
    let ds = derivations_bruteforce(t);
    let mut acc = RrefBuilder::new(n * n);
    let mut provenance = Vec::new();
    for p in probes {
        add_point_constraints(&mut acc, &ds, &p.element)?;
        provenance.push(p.tag.clone());
    }
    let upper_dim = |acc: &RrefBuilder| n * n - acc.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut samples_used = 0usize;
    let mut schedule = Vec::new();
    let mut target = 32usize.min(opts.max_samples);
    while upper_dim(&acc) != ds.dim() && samples_used < opts.max_samples {
        while samples_used < target {
            let x = random_point(&mut rng, n, opts.bound);
            add_point_constraints(&mut acc, &ds, &x)?;
            provenance.push(format!("random:{}/{}", opts.seed, samples_used));
            samples_used += 1;
        }
        schedule.push(target);
        target = (target * 2).min(opts.max_samples);
    }
    let dim_upper_bound = upper_dim(&acc);
    let status = if dim_upper_bound == ds.dim() {
        CertificateStatus::Verified
    } else {
        CertificateStatus::Inconclusive
    };
    let residual_basis = if status == CertificateStatus::Inconclusive {
        let upper = crate::linalg::nullspace(acc.clone().into_subspace().basis());
        let mut rows = Vec::new();
        for r in upper.basis_rows() {
            if !ds.space.contains(r)? {
                rows.push(r.iter().map(crate::linalg::format_rat).collect());
            }
        }
        Some(rows)
    } else {
        None
    };
    Ok(LocalityCertificate {
        algebra_name: t.name().to_string(),
        dim_der: ds.dim(),
        dim_upper_bound,
        samples_used,
        structured_probes_used: probes.len(),
        seed: opts.seed,
        status,
        sample_bound: opts.bound,
        max_samples: opts.max_samples,
        sample_schedule: schedule,
        probe_provenance: provenance,
        residual_basis,
    })
}

/// Coefficients of a derivation in the symbolic form
/// R_a + Σ ω_k θ_k + Σ λ_{i,j} π_{i,j}.
#[derive(Clone, Debug)]
pub struct DerivationCoefficients {
    /// Coordinates of a in the S basis.
    pub a: Vec<Rat>,
    pub omega: BTreeMap<usize, Rat>,
    pub lambda: BTreeMap<(usize, usize), Rat>,
}

/// Rebuilds the endomorphism from symbolic coefficients; the result lies in
/// the span of the symbolic generators by construction.
pub fn reconstruct(coeffs: &DerivationCoefficients, layout: &SemidirectLayout) -> Result<MatrixQ> {
    let sdim = layout.lie.dim();
    let dim = layout.table.dim();
    if coeffs.a.len() != sdim {
        return Err(Error::DimensionMismatch {
            context: "coefficient a",
            expected: sdim,
            found: coeffs.a.len(),
        });
    }
    for k in coeffs.omega.keys() {
        if !layout.theta.contains_key(k) {
            return Err(Error::CoefficientMismatch(format!("omega[{}]", k + 1)));
        }
    }
    for ij in coeffs.lambda.keys() {
        if !layout.pi.contains_key(ij) {
            return Err(Error::CoefficientMismatch(format!(
                "lambda[({}, {})]",
                ij.0 + 1,
                ij.1 + 1
            )));
        }
    }
    let a = Element::from_coords(layout.embed_lie_vec(&coeffs.a));
    let mut m = layout.table.right_mult_operator(&a)?;
    for (k, w) in &coeffs.omega {
        if w.is_zero() {
            continue;
        }
        let block = embed_block(
            dim,
            &layout.theta[k],
            layout.v_ranges[*k].start,
            layout.s_range.start,
        );
        m = m.add(&block.scale(w));
    }
    for ((i, j), l) in &coeffs.lambda {
        if l.is_zero() {
            continue;
        }
        let block = embed_block(
            dim,
            &layout.pi[&(*i, *j)],
            layout.v_ranges[*j].start,
            layout.v_ranges[*i].start,
        );
        m = m.add(&block.scale(l));
    }
    Ok(m)
}

/// The block of Δ mapping S ⋉ V_p coordinates into V_q coordinates:
/// vdim_q rows, sdim + vdim_p columns (S columns first).
pub fn component_projection(
    delta: &MatrixQ,
    layout: &SemidirectLayout,
    p: usize,
    q: usize,
) -> Result<MatrixQ> {
    let m = layout.modules.len();
    for (label, idx) in [("p", p), ("q", q)] {
        if idx >= m {
            return Err(Error::IndexOutOfRange {
                context: format!("module index {label}"),
                index: idx + 1,
                max: m,
            });
        }
    }
    let sdim = layout.lie.dim();
    let rp = layout.v_ranges[p].clone();
    let rq = layout.v_ranges[q].clone();
    let mut out = MatrixQ::zeros(rq.len(), sdim + rp.len());
    for (r, row) in rq.clone().enumerate() {
        for c in 0..sdim {
            *out.at_mut(r, c) = delta.at(row, c).clone();
        }
        for (c, col) in rp.clone().enumerate() {
            *out.at_mut(r, sdim + c) = delta.at(row, col).clone();
        }
    }
    Ok(out)
}

/// Seeded random integer endomorphism; used by tests and negative controls.
pub fn random_map(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> MatrixQ {
    let data = (0..dim * dim)
        .map(|_| rat(rng.gen_range(-bound..=bound)))
        .collect();
    MatrixQ::from_flat(dim, dim, data)
}

/// Seeded random point with integer coordinates in [-bound, bound].
pub fn random_element(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Element {
    random_point(rng, dim, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{sl2_cartan_indices, sl2_simple_roots, sl2_table};
    use crate::repr::{probe_points, root_decomposition, semidirect, sl2_irreducible, weight_decomposition};

    fn layout(ms: &[u32]) -> SemidirectLayout {
        let s = sl2_table();
        let mods: Vec<_> = ms
            .iter()
            .map(|&m| sl2_irreducible(&s, m).unwrap())
            .collect();
        semidirect(&s, &mods).unwrap()
    }

    #[test]
    fn bruteforce_dims() {
        assert_eq!(derivations_bruteforce(&sl2_table()).dim(), 3);
        assert_eq!(derivations_bruteforce(&layout(&[2]).table).dim(), 5);
        let ab = StructureTable::zero_algebra("abelian", 3);
        assert_eq!(derivations_bruteforce(&ab).dim(), 9);
    }

    #[test]
    fn symbolic_dims() {
        assert_eq!(symbolic_derivation_basis(&layout(&[2])).unwrap().dim(), 5);
        assert_eq!(symbolic_derivation_basis(&layout(&[4])).unwrap().dim(), 4);
        assert_eq!(
            symbolic_derivation_basis(&layout(&[2, 2])).unwrap().dim(),
            9
        );
    }

    #[test]
    fn symbolic_equals_bruteforce_on_v2() {
        let l = layout(&[2]);
        let bf = derivations_bruteforce(&l.table);
        let sy = symbolic_derivation_basis(&l).unwrap();
        assert!(spaces_equal(&bf, &sy));
    }

    #[test]
    fn der_of_sl2_is_right_multiplications() {
        let l = layout(&[]);
        let bf = derivations_bruteforce(&l.table);
        let sy = symbolic_derivation_basis(&l).unwrap();
        assert!(spaces_equal(&bf, &sy));
        assert_eq!(sy.dim(), 3);
    }

    #[test]
    fn wrong_classification_detected() {
        // Pretend sl2xV(4) had a theta: graft the identity as a fake
        // S -> V intertwiner and check the spaces now differ.
        let l = layout(&[4]);
        let bf = derivations_bruteforce(&l.table);
        let mut gens: Vec<Vec<Rat>> = symbolic_generators(&l)
            .unwrap()
            .into_iter()
            .map(|g| g.flatten())
            .collect();
        let fake = embed_block(
            8,
            &MatrixQ::identity(3),
            l.v_ranges[0].start,
            l.s_range.start,
        );
        gens.push(fake.flatten());
        let wrong = DerivationSpace {
            algebra_dim: 8,
            space: Subspace::from_generators(64, gens),
        };
        assert!(!spaces_equal(&bf, &wrong));
    }

    #[test]
    fn evaluation_images_on_sl2() {
        let ds = derivations_bruteforce(&sl2_table());
        let e = Element::basis(3, 0);
        let h = Element::basis(3, 2);
        let img_e = evaluation_image(&ds, &e).unwrap();
        assert_eq!(img_e.dim(), 2);
        assert!(img_e.contains(&[rat(1), rat(0), rat(0)]).unwrap());
        assert!(img_e.contains(&[rat(0), rat(0), rat(1)]).unwrap());
        let img_h = evaluation_image(&ds, &h).unwrap();
        assert_eq!(img_h.dim(), 2);
        assert!(img_h.contains(&[rat(1), rat(0), rat(0)]).unwrap());
        assert!(img_h.contains(&[rat(0), rat(1), rat(0)]).unwrap());
        assert!(!img_h.contains(&[rat(0), rat(0), rat(1)]).unwrap());
        let img_0 = evaluation_image(&ds, &Element::zero(3)).unwrap();
        assert_eq!(img_0.dim(), 0);
    }

    #[test]
    fn pointwise_checks() {
        let ds = derivations_bruteforce(&sl2_table());
        let zero = MatrixQ::zeros(3, 3);
        let h = Element::basis(3, 2);
        assert!(pointwise_local_check(&zero, &h, &ds).unwrap());
        for d in ds.basis_maps() {
            assert!(pointwise_local_check(&d, &h, &ds).unwrap());
        }
        // swap map e<->f, h->h: at x = h it produces h, not in span{e,f}
        let mut swap = MatrixQ::zeros(3, 3);
        *swap.at_mut(1, 0) = rat(1);
        *swap.at_mut(0, 1) = rat(1);
        *swap.at_mut(2, 2) = rat(1);
        assert!(!pointwise_local_check(&swap, &h, &ds).unwrap());
    }

    #[test]
    fn upper_bound_with_no_points_is_full() {
        let t = sl2_table();
        let ds = derivations_bruteforce(&t);
        let ub = local_upper_bound(&t, &ds, &[]).unwrap();
        assert_eq!(ub.dim(), 9);
    }

    #[test]
    fn upper_bound_contains_der() {
        let t = sl2_table();
        let ds = derivations_bruteforce(&t);
        let pts: Vec<Element> = (0..3).map(|i| Element::basis(3, i)).collect();
        let ub = local_upper_bound(&t, &ds, &pts).unwrap();
        assert!(ds.space.is_subspace_of(&ub).unwrap());
    }

    #[test]
    fn certificate_on_sl2() {
        let cert = verify_theorem(&sl2_table(), &[], &VerifyOptions::default()).unwrap();
        assert_eq!(cert.status, CertificateStatus::Verified);
        assert_eq!(cert.dim_der, 3);
        assert_eq!(cert.dim_upper_bound, 3);
        assert!(cert.residual_basis.is_none());
    }

    #[test]
    fn certificate_on_sl2_v2_with_probes() {
        let l = layout(&[2]);
        let rd = root_decomposition(&sl2_table(), &sl2_cartan_indices(), sl2_simple_roots())
            .unwrap();
        let wds: Vec<_> = l
            .modules
            .iter()
            .map(|m| weight_decomposition(m, &rd).unwrap())
            .collect();
        let probes = probe_points(&l, &rd, &wds).unwrap();
        let cert = verify_theorem(&l.table, &probes, &VerifyOptions::default()).unwrap();
        assert_eq!(cert.status, CertificateStatus::Verified);
        assert_eq!(cert.dim_der, 5);
        assert_eq!(cert.structured_probes_used, probes.len());
        assert_eq!(
            cert.probe_provenance.len(),
            probes.len() + cert.samples_used
        );
    }

    #[test]
    fn inconclusive_when_starved() {
        // With zero samples and no probes the upper bound stays full.
        let cert = verify_theorem(
            &sl2_table(),
            &[],
            &VerifyOptions {
                seed: 0,
                max_samples: 0,
                bound: 10,
            },
        )
        .unwrap();
        assert_eq!(cert.status, CertificateStatus::Inconclusive);
        assert_eq!(cert.dim_upper_bound, 9);
        // The residual lists every upper-bound basis vector that is not
        // itself a derivation; there must be at least the dimension gap.
        let residual = cert.residual_basis.unwrap();
        assert!(residual.len() >= cert.dim_upper_bound - cert.dim_der);
    }

    #[test]
    fn reconstruct_paths() {
        let l = layout(&[2]);
        let zero = DerivationCoefficients {
            a: vec![Rat::zero(); 3],
            omega: BTreeMap::new(),
            lambda: BTreeMap::new(),
        };
        assert!(reconstruct(&zero, &l).unwrap().is_zero());
        let rh = DerivationCoefficients {
            a: Element::basis(3, 2).coords,
            omega: BTreeMap::new(),
            lambda: BTreeMap::new(),
        };
        let m = reconstruct(&rh, &l).unwrap();
        let h = Element::from_coords(l.embed_lie_vec(&Element::basis(3, 2).coords));
        assert_eq!(m, l.table.right_mult_operator(&h).unwrap());
        let mut omega = BTreeMap::new();
        omega.insert(0, rat(2));
        let mut lambda = BTreeMap::new();
        lambda.insert((0, 0), rat(-3));
        let mixed = DerivationCoefficients {
            a: vec![rat(1), rat(-1), rat(2)],
            omega,
            lambda,
        };
        let m = reconstruct(&mixed, &l).unwrap();
        let sy = symbolic_derivation_basis(&l).unwrap();
        assert!(sy.space.contains(&m.flatten()).unwrap());
        assert!(is_derivation(&l.table, &m));
        // mismatched index set
        let mut bad_lambda = BTreeMap::new();
        bad_lambda.insert((0, 1), rat(1));
        let bad = DerivationCoefficients {
            a: vec![Rat::zero(); 3],
            omega: BTreeMap::new(),
            lambda: bad_lambda,
        };
        assert!(reconstruct(&bad, &l).is_err());
    }

    #[test]
    fn component_projection_blocks() {
        let l = layout(&[2, 2]);
        // pi_{0,1} extended by zero projects back to itself
        let p01 = &l.pi[&(0, 1)];
        let ext = embed_block(
            l.table.dim(),
            p01,
            l.v_ranges[1].start,
            l.v_ranges[0].start,
        );
        let block = component_projection(&ext, &l, 0, 1).unwrap();
        // S columns zero, V_p block equals pi
        for r in 0..3 {
            for c in 0..3 {
                assert!(block.at(r, c).is_zero());
                assert_eq!(block.at(r, 3 + c), p01.at(r, c));
            }
        }
        // R_a has zero (p, q) block for p != q
        let a = Element::from_coords(l.embed_lie_vec(&Element::basis(3, 2).coords));
        let ra = l.table.right_mult_operator(&a).unwrap();
        assert!(component_projection(&ra, &l, 0, 1).unwrap().is_zero());
        // theta_q extended: S block is theta, V block zero
        let th = &l.theta[&1];
        let ext = embed_block(l.table.dim(), th, l.v_ranges[1].start, 0);
        let block = component_projection(&ext, &l, 0, 1).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(block.at(r, c), th.at(r, c));
                assert!(block.at(r, 3 + c).is_zero());
            }
        }
        assert!(component_projection(&ra, &l, 0, 5).is_err());
    }
}
