use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use leibniz::algebra::StructureTable;
use leibniz::catalog::{catalog, catalog_names, CatalogAlgebra};
use leibniz::deriv::{
    derivations_bruteforce, spaces_equal, verify_theorem, CertificateStatus, VerifyOptions,
};
use leibniz::io::{
    parse_algebra, sha256_hex, AlgebraFile, CheckSection, DerSection, FileKind, RunReport,
};
use leibniz::linalg::format_rat;
use leibniz::repr::check_module;
use leibniz::{Error, Result};

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Right Leibniz algebras: derivations and local-derivation certificates (right Leibniz, right modules)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Axiom checks: Leibniz/Lie/module, squares ideal, liezation
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Derivation space dimensions and basis dump
    Der {
        /// A file path or "catalog:NAME"
        input: String,
        /// Also compute the symbolic basis and compare (catalog inputs)
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        dump_basis: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Local-derivation certificate run
    Local {
        /// A file path or "catalog:NAME"
        input: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 512)]
        max_samples: usize,
        #[arg(long, default_value_t = 10)]
        bound: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Built-in algebra catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print the published catalog names
    List,
    /// Emit a catalog algebra as an algebra file
    Emit { name: String },
}

enum Input {
    Catalog(Box<CatalogAlgebra>, String, String),
    File(AlgebraFile, String, String),
}

fn load_input(spec: &str) -> Result<Input> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        let alg = catalog(name)?;
        let emitted = AlgebraFile::from_table(&alg.table, FileKind::Leibniz, None, None).to_json();
        Ok(Input::Catalog(
            Box::new(alg),
            spec.to_string(),
            sha256_hex(&emitted),
        ))
    } else {
        let text = std::fs::read_to_string(spec)?;
        let file = parse_algebra(&text)?;
        Ok(Input::File(file, spec.to_string(), sha256_hex(&text)))
    }
}

/// Resolves a validated structure table out of the input, enforcing the
/// axiom its kind promises.
fn table_of(input: &Input) -> Result<StructureTable> {
    match input {
        Input::Catalog(alg, _, _) => Ok(alg.table.clone()),
        Input::File(file, source, _) => {
            let table = file.to_structure_table()?;
            let report = table.check_right_leibniz();
            if let Some((i, j, k)) = report.first_violation {
                return Err(Error::InvalidFile(format!(
                    "{source}: right Leibniz identity fails at basis triple ({}, {}, {})",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if file.kind == FileKind::Lie && !table.is_lie() {
                return Err(Error::NotLie(
                    table.name().to_string(),
                    "file declares kind lie".into(),
                ));
            }
            Ok(table)
        }
    }
}

fn resolve_lie_ref(lie_ref: &str, base: &Path) -> Result<StructureTable> {
    if let Some(name) = lie_ref.strip_prefix("catalog:") {
        if name == "sl2" {
            return Ok(leibniz::catalog::sl2_table());
        }
        return Err(Error::InvalidFile(format!(
            "lie_ref catalog entry '{name}' is not a plain Lie algebra"
        )));
    }
    let path = base.parent().unwrap_or(Path::new(".")).join(lie_ref);
    let text = std::fs::read_to_string(&path)?;
    let file = parse_algebra(&text)?;
    let table = file.to_structure_table()?;
    if !table.is_lie() {
        return Err(Error::NotLie(
            table.name().to_string(),
            format!("lie_ref '{lie_ref}' must be a Lie algebra"),
        ));
    }
    Ok(table)
}

fn emit(report: &RunReport, format: Format) {
    match format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
}

fn run_check(file: &PathBuf, format: Format) -> Result<u8> {
    let text = std::fs::read_to_string(file)?;
    let parsed = parse_algebra(&text)?;
    let source = file.display().to_string();
    let mut report = RunReport::new(source.clone(), sha256_hex(&text));
    let mut ok = true;
    let section = if parsed.kind == FileKind::Module {
        let lie_ref = parsed.lie_ref.as_deref().expect("validated at parse");
        let lie = resolve_lie_ref(lie_ref, file)?;
        let action = parsed.to_module_action(lie)?;
        let holds = check_module(&action);
        ok = holds;
        CheckSection {
            kind: "module".into(),
            dim: action.vdim,
            right_leibniz_holds: holds,
            first_violation: None,
            is_lie: false,
            squares_ideal_dim: None,
            liezation_dim: None,
            liezation_is_lie: None,
            module_axiom_holds: Some(holds),
        }
    } else {
        let table = parsed.to_structure_table()?;
        let leib = table.check_right_leibniz();
        let is_lie = leib.holds && table.is_lie();
        if !leib.holds || (parsed.kind == FileKind::Lie && !is_lie) {
            ok = false;
        }
        let (squares, liez, liez_lie) = if leib.holds {
            let ideal = table.squares_ideal()?;
            let q = table.liezation()?;
            (Some(ideal.dim()), Some(q.dim()), Some(q.is_lie()))
        } else {
            (None, None, None)
        };
        CheckSection {
            kind: match parsed.kind {
                FileKind::Leibniz => "leibniz".into(),
                FileKind::Lie => "lie".into(),
                FileKind::Module => unreachable!(),
            },
            dim: table.dim(),
            right_leibniz_holds: leib.holds,
            first_violation: leib.first_violation.map(|(i, j, k)| (i + 1, j + 1, k + 1)),
            is_lie,
            squares_ideal_dim: squares,
            liezation_dim: liez,
            liezation_is_lie: liez_lie,
            module_axiom_holds: None,
        }
    };
    report.check = Some(section);
    emit(&report, format);
    Ok(if ok { 0 } else { 1 })
}

fn run_der(input: &str, symbolic: bool, dump_basis: bool, format: Format) -> Result<u8> {
    let input = load_input(input)?;
    let table = table_of(&input)?;
    let bf = derivations_bruteforce(&table);
    let mut section = DerSection {
        dim_der_bruteforce: bf.dim(),
        dim_der_symbolic: None,
        spaces_equal: None,
        gamma_s: None,
        gamma_v: None,
        basis: None,
    };
    if let Input::Catalog(alg, _, _) = &input {
        section.gamma_s = Some(
            alg.components
                .iter()
                .map(|c| c.layout.gamma_s.iter().map(|k| k + 1).collect())
                .collect(),
        );
        section.gamma_v = Some(
            alg.components
                .iter()
                .map(|c| {
                    c.layout
                        .gamma_v
                        .iter()
                        .map(|&(i, j)| (i + 1, j + 1))
                        .collect()
                })
                .collect(),
        );
        if symbolic {
            let sy = alg.symbolic_derivation_space()?;
            section.dim_der_symbolic = Some(sy.dim());
            section.spaces_equal = Some(spaces_equal(&bf, &sy));
        }
    } else if symbolic {
        return Err(Error::InvalidFile(
            "--symbolic requires a catalog input (no semidirect layout for plain files)".into(),
        ));
    }
    if dump_basis {
        section.basis = Some(
            bf.space
                .basis_rows()
                .map(|r| r.iter().map(format_rat).collect())
                .collect(),
        );
    }
    let (source, digest) = match &input {
        Input::Catalog(_, s, d) | Input::File(_, s, d) => (s.clone(), d.clone()),
    };
    let mut report = RunReport::new(source, digest);
    let ok = section.spaces_equal != Some(false);
    report.derivations = Some(section);
    emit(&report, format);
    Ok(if ok { 0 } else { 1 })
}

fn run_local(input: &str, opts: VerifyOptions, format: Format) -> Result<u8> {
    let input = load_input(input)?;
    let table = table_of(&input)?;
    let probes = match &input {
        Input::Catalog(alg, _, _) => alg.probes()?,
        Input::File(_, _, _) => Vec::new(),
    };
    let cert = verify_theorem(&table, &probes, &opts)?;
    let status = cert.status;
    let (source, digest) = match &input {
        Input::Catalog(_, s, d) | Input::File(_, s, d) => (s.clone(), d.clone()),
    };
    let mut report = RunReport::new(source, digest);
    report.certificate = Some(cert);
    emit(&report, format);
    Ok(match status {
        CertificateStatus::Verified => 0,
        CertificateStatus::Inconclusive => 2,
    })
}

fn run() -> Result<u8> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { file, format } => run_check(&file, format),
        Command::Der {
            input,
            symbolic,
            dump_basis,
            format,
        } => run_der(&input, symbolic, dump_basis, format),
        Command::Local {
            input,
            seed,
            max_samples,
            bound,
            format,
        } => run_local(
            &input,
            VerifyOptions {
                seed,
                max_samples,
                bound,
            },
            format,
        ),
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for name in catalog_names() {
                    println!("{name}");
                }
                Ok(0)
            }
            CatalogAction::Emit { name } => {
                let alg = catalog(&name)?;
                let (kind, cartan, simple_roots) = if name == "sl2" {
                    (
                        FileKind::Lie,
                        Some(vec![3]),
                        Some(leibniz::catalog::sl2_simple_roots()),
                    )
                } else {
                    (FileKind::Leibniz, None, None)
                };
                let f = AlgebraFile::from_table(&alg.table, kind, cartan, simple_roots);
                print!("{}", f.to_json());
                Ok(0)
            }
        },
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
