//! File format and report emission.
//!
//! Conventions are stated explicitly in every file and report:
//! "right Leibniz, right modules". Left-Leibniz data is out of scope and
//! will simply fail the axiom checks. Files carry sparse constants with
//! 1-based indices and rationals serialized as "p/q" (or "p").

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::StructureTable;
use crate::deriv::LocalityCertificate;
use crate::error::{Error, Result};
use crate::linalg::{format_rat, parse_rat, MatrixQ, Rat};
use crate::repr::ModuleAction;
use num_traits::Zero;

pub const FORMAT_VERSION: &str = "1";
pub const CONVENTION: &str = "right Leibniz, right modules";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FileKind {
    Leibniz,
    Lie,
    Module,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantEntry {
    /// For algebras: [b_i, b_j] has coefficient `value` on b_k.
    /// For modules: v_j · g_i has coefficient `value` on v_k
    /// (i indexes the Lie basis, j and k the module basis). All 1-based.
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: String,
    pub convention: String,
    pub kind: FileKind,
    pub name: String,
    pub dim: usize,
    /// Module files only: "catalog:NAME" or a path, resolved by the caller.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie_ref: Option<String>,
    pub basis_labels: Vec<String>,
    pub constants: Vec<ConstantEntry>,
    /// Optional Chevalley data, 1-based Cartan basis indices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple_roots: Option<Vec<Vec<i64>>>,
}

/// Strict parse: unknown fields, bad versions, out-of-range indices,
/// duplicate entries and malformed rationals are all rejected.
pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    if file.format_version != FORMAT_VERSION {
        return Err(Error::InvalidFile(format!(
            "unsupported format_version '{}' (expected '{FORMAT_VERSION}')",
            file.format_version
        )));
    }
    if file.convention != CONVENTION {
        return Err(Error::InvalidFile(format!(
            "convention banner must be '{CONVENTION}', found '{}'",
            file.convention
        )));
    }
    if file.basis_labels.len() != file.dim {
        return Err(Error::InvalidFile(format!(
            "dim is {} but {} basis labels given",
            file.dim,
            file.basis_labels.len()
        )));
    }
    if file.kind == FileKind::Module && file.lie_ref.is_none() {
        return Err(Error::InvalidFile("module file requires lie_ref".into()));
    }
    if file.kind != FileKind::Module && file.lie_ref.is_some() {
        return Err(Error::InvalidFile(
            "lie_ref is only valid for module files".into(),
        ));
    }
    let mut seen = std::collections::BTreeSet::new();
    for e in &file.constants {
        // For modules the generator index i is validated against the Lie
        // algebra once lie_ref is resolved.
        if file.kind != FileKind::Module {
            check_range("i", e.i, file.dim, e)?;
        }
        check_range("j", e.j, file.dim, e)?;
        check_range("k", e.k, file.dim, e)?;
        parse_rat(&e.value)?;
        if !seen.insert((e.i, e.j, e.k)) {
            return Err(Error::DuplicateEntry(e.i, e.j, e.k));
        }
    }
    if let Some(cartan) = &file.cartan {
        for &c in cartan {
            if c == 0 || c > file.dim {
                return Err(Error::IndexOutOfRange {
                    context: "cartan".into(),
                    index: c,
                    max: file.dim,
                });
            }
        }
    }
    Ok(file)
}

fn check_range(field: &str, v: usize, dim: usize, e: &ConstantEntry) -> Result<()> {
    if v == 0 || v > dim {
        return Err(Error::IndexOutOfRange {
            context: format!("constants entry (i={}, j={}, k={}), field {field}", e.i, e.j, e.k),
            index: v,
            max: dim,
        });
    }
    Ok(())
}

impl AlgebraFile {
    pub fn to_structure_table(&self) -> Result<StructureTable> {
        if self.kind == FileKind::Module {
            return Err(Error::InvalidFile(
                "module file cannot be read as a structure table".into(),
            ));
        }
        let dim = self.dim;
        let mut constants = vec![Rat::zero(); dim * dim * dim];
        for e in &self.constants {
            constants[((e.i - 1) * dim + (e.j - 1)) * dim + (e.k - 1)] = parse_rat(&e.value)?;
        }
        StructureTable::new(self.name.clone(), self.basis_labels.clone(), constants)
    }

    /// Builds the module action over an already-resolved Lie table.
    pub fn to_module_action(&self, lie: StructureTable) -> Result<ModuleAction> {
        if self.kind != FileKind::Module {
            return Err(Error::InvalidFile("not a module file".into()));
        }
        let vdim = self.dim;
        let mut action = vec![MatrixQ::zeros(vdim, vdim); lie.dim()];
        for e in &self.constants {
            if e.i == 0 || e.i > lie.dim() {
                return Err(Error::IndexOutOfRange {
                    context: format!("module generator index in entry (i={}, j={}, k={})", e.i, e.j, e.k),
                    index: e.i,
                    max: lie.dim(),
                });
            }
            *action[e.i - 1].at_mut(e.k - 1, e.j - 1) = parse_rat(&e.value)?;
        }
        ModuleAction::new(self.name.clone(), lie, action)
    }

    pub fn from_table(
        table: &StructureTable,
        kind: FileKind,
        cartan: Option<Vec<usize>>,
        simple_roots: Option<Vec<Vec<i64>>>,
    ) -> Self {
        let dim = table.dim();
        let mut constants = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = table.c(i, j, k);
                    if !v.is_zero() {
                        constants.push(ConstantEntry {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            value: format_rat(v),
                        });
                    }
                }
            }
        }
        AlgebraFile {
            format_version: FORMAT_VERSION.to_string(),
            convention: CONVENTION.to_string(),
            kind,
            name: table.name().to_string(),
            dim,
            lie_ref: None,
            basis_labels: table.basis_labels().to_vec(),
            constants,
            cartan,
            simple_roots,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

pub fn sha256_hex(text: &str) -> String {
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    format!("sha256:{:x}", h.finalize())
}

#[derive(Clone, Debug, Serialize)]
pub struct InputInfo {
    pub source: String,
    pub digest: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckSection {
    pub kind: String,
    pub dim: usize,
    pub right_leibniz_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<(usize, usize, usize)>,
    pub is_lie: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub squares_ideal_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub liezation_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub liezation_is_lie: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module_axiom_holds: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DerSection {
    pub dim_der_bruteforce: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_der_symbolic: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spaces_equal: Option<bool>,
    /// 1-based module indices isomorphic to the adjoint, per summand.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_s: Option<Vec<Vec<usize>>>,
    /// 1-based ordered isomorphic pairs, per summand.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_v: Option<Vec<Vec<(usize, usize)>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool_version: String,
    pub convention: String,
    pub input: InputInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivations: Option<DerSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<LocalityCertificate>,
}

impl RunReport {
    pub fn new(source: String, digest: String) -> Self {
        RunReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            convention: CONVENTION.to_string(),
            input: InputInfo { source, digest },
            check: None,
            derivations: None,
            certificate: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("leibniz {} ({})", self.tool_version, self.convention));
        line(format!("input: {} [{}]", self.input.source, self.input.digest));
        if let Some(c) = &self.check {
            line(format!("kind: {} (dim {})", c.kind, c.dim));
            match c.first_violation {
                None => line("right Leibniz identity: holds".into()),
                Some((i, j, k)) => {
                    line(format!("right Leibniz identity: FAILS at basis triple ({i}, {j}, {k})"))
                }
            }
            line(format!("is Lie: {}", c.is_lie));
            if let Some(d) = c.squares_ideal_dim {
                line(format!("squares ideal dim: {d}"));
            }
            if let Some(d) = c.liezation_dim {
                line(format!(
                    "liezation dim: {d} (Lie: {})",
                    c.liezation_is_lie.unwrap_or(false)
                ));
            }
            if let Some(ok) = c.module_axiom_holds {
                line(format!("right-module axiom: {}", if ok { "holds" } else { "FAILS" }));
            }
        }
        if let Some(d) = &self.derivations {
            line(format!("dim Der (brute force): {}", d.dim_der_bruteforce));
            if let Some(s) = d.dim_der_symbolic {
                line(format!("dim Der (symbolic): {s}"));
            }
            if let Some(eq) = d.spaces_equal {
                line(format!("brute-force and symbolic spaces equal: {eq}"));
            }
            if let Some(gs) = &d.gamma_s {
                line(format!("Gamma_S (per summand, 1-based): {gs:?}"));
            }
            if let Some(gv) = &d.gamma_v {
                line(format!("Gamma_V (per summand, 1-based pairs): {gv:?}"));
            }
            if let Some(basis) = &d.basis {
                line(format!("derivation basis ({} maps, flattened row-major):", basis.len()));
                for (i, b) in basis.iter().enumerate() {
                    line(format!("  D{}: [{}]", i + 1, b.join(", ")));
                }
            }
        }
        if let Some(cert) = &self.certificate {
            line(format!("algebra: {}", cert.algebra_name));
            line(format!("dim Der: {}", cert.dim_der));
            line(format!("dim sampled upper bound: {}", cert.dim_upper_bound));
            line(format!(
                "structured probes: {}, random samples: {} (seed {}, bound {}, schedule {:?})",
                cert.structured_probes_used,
                cert.samples_used,
                cert.seed,
                cert.sample_bound,
                cert.sample_schedule
            ));
            let status = match cert.status {
                crate::deriv::CertificateStatus::Verified => "VERIFIED",
                crate::deriv::CertificateStatus::Inconclusive => "INCONCLUSIVE",
            };
            line(format!("status: {status}"));
            if let Some(res) = &cert.residual_basis {
                line(format!(
                    "residual upper-bound basis outside Der ({} vectors):",
                    res.len()
                ));
                for r in res {
                    line(format!("  [{}]", r.join(", ")));
                }
            }
        }
        out
    }
}
