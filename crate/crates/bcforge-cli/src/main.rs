//! `bcforge`: validate models, compute cohomology tables, run the
//! ∂∂̄-lemma diagnostic, and compare sub-complexes.
//!
//! Exit codes: 0 success, 1 invariant violation in a valid parse (pairing
//! axioms, star closure, golden diffs), 2 validation or parse failure,
//! 64 usage error.

mod report;

use bcforge_core::complex::{CohomologyTable, Theory};
use bcforge_core::models::{self, reference, BuiltModel, ModelSpec};
use bcforge_core::morphisms::ComplexMap;
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_INVARIANT: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "bcforge",
    about = "Exact cohomology tables for bounded double complexes",
    version
)]
struct Cli {
    /// Seed for the self-check instances run by --golden.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ModelArg {
    /// Path to a modelspec-v1 JSON document.
    #[arg(long, value_name = "PATH", conflicts_with = "preset")]
    model: Option<PathBuf>,
    /// Name of a shipped preset (see `bcforge validate --list`).
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the structural, pairing, and star-closure invariants of a model.
    Validate {
        #[command(flatten)]
        model: ModelArg,
        /// List the shipped preset names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print per-bidegree cohomology dimensions.
    Table {
        #[command(flatten)]
        model: ModelArg,
        /// Comma-separated subset of dr,del,delbar,bc,aeppli,e1,pure.
        #[arg(long, default_value = "dr,delbar,bc")]
        theories: String,
        #[arg(long, default_value = "text")]
        format: String,
        /// Include cocycle representative labels in the output.
        #[arg(long)]
        reps: bool,
        /// Diff every preset against the shipped expected tables.
        #[arg(long)]
        golden: bool,
    },
    /// Print the ∂∂̄ degrees and the lemma verdict.
    Ddbar {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Compare a sub-model against an ambient model through the induced maps.
    Compare {
        /// Sub-model: preset name or path.
        #[arg(long)]
        sub: String,
        /// Ambient model: preset name or path.
        #[arg(long)]
        ambient: String,
        #[arg(long, default_value = "dr,delbar,bc")]
        theories: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let code = match run(cli) {
        Ok(code) => code,
        Err(CmdError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            EXIT_USAGE
        }
        Err(CmdError::Validation(msg)) => {
            eprintln!("validation error: {msg}");
            EXIT_VALIDATION
        }
    };
    ExitCode::from(code)
}

fn configure_threads() {
    if let Ok(v) = std::env::var("BCFORGE_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
}

enum CmdError {
    Usage(String),
    Validation(String),
}

fn load_spec(arg: &ModelArg) -> Result<ModelSpec, CmdError> {
    match (&arg.model, &arg.preset) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CmdError::Validation(format!("cannot read {}: {e}", path.display())))?;
            models::model_from_json(&text).map_err(|e| CmdError::Validation(e.to_string()))
        }
        (None, Some(name)) => {
            models::preset(name).map_err(|e| CmdError::Usage(e.to_string()))
        }
        _ => Err(CmdError::Usage(
            "exactly one of --model or --preset is required".into(),
        )),
    }
}

fn load_spec_by_token(token: &str) -> Result<ModelSpec, CmdError> {
    if models::preset_names().contains(&token) {
        models::preset(token).map_err(|e| CmdError::Usage(e.to_string()))
    } else if std::path::Path::new(token).exists() {
        let text = std::fs::read_to_string(token)
            .map_err(|e| CmdError::Validation(format!("cannot read {token}: {e}")))?;
        models::model_from_json(&text).map_err(|e| CmdError::Validation(e.to_string()))
    } else {
        Err(CmdError::Usage(format!(
            "`{token}` is neither a preset name nor an existing file"
        )))
    }
}

fn build(spec: &ModelSpec) -> Result<BuiltModel, CmdError> {
    spec.build().map_err(|e| CmdError::Validation(e.to_string()))
}

fn parse_theories(s: &str) -> Result<Vec<Theory>, CmdError> {
    let mut out = Vec::new();
    for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match Theory::parse(token) {
            Some(t) => out.push(t),
            None => return Err(CmdError::Usage(format!("unknown theory `{token}`"))),
        }
    }
    if out.is_empty() {
        return Err(CmdError::Usage("no theories requested".into()));
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<u8, CmdError> {
    match cli.command {
        Command::Validate { model, list } => {
            if list {
                for name in models::preset_names() {
                    println!("{name}");
                }
                return Ok(EXIT_OK);
            }
            let spec = load_spec(&model)?;
            cmd_validate(&spec)
        }
        Command::Table {
            model,
            theories,
            format,
            reps,
            golden,
        } => {
            if golden {
                return cmd_golden(cli.seed);
            }
            let spec = load_spec(&model)?;
            let theories = parse_theories(&theories)?;
            cmd_table(&spec, &theories, &format, reps)
        }
        Command::Ddbar { model, format } => {
            let spec = load_spec(&model)?;
            cmd_ddbar(&spec, &format)
        }
        Command::Compare {
            sub,
            ambient,
            theories,
            format,
        } => {
            let sub_spec = load_spec_by_token(&sub)?;
            let amb_spec = load_spec_by_token(&ambient)?;
            let theories = parse_theories(&theories)?;
            cmd_compare(&sub_spec, &amb_spec, &theories, &format)
        }
    }
}

fn cmd_validate(spec: &ModelSpec) -> Result<u8, CmdError> {
    let built = build(spec)?;
    let violations = built.complex().validate();
    if !violations.is_empty() {
        for v in &violations {
            eprintln!("complex violation {v}");
        }
        return Ok(EXIT_VALIDATION);
    }
    let pd = built.paired.check_pd_axioms();
    let star = models::star_closure_check(&built, spec);
    if !pd.is_empty() || !star {
        for v in &pd {
            eprintln!("pairing violation {v}");
        }
        if !star {
            eprintln!("star closure fails: some generator has no complementary partner");
        }
        return Ok(EXIT_INVARIANT);
    }
    println!("ok: {} validates ({} generators)", spec.name, built.complex().total_dimension());
    Ok(EXIT_OK)
}

fn cmd_table(spec: &ModelSpec, theories: &[Theory], format: &str, reps: bool) -> Result<u8, CmdError> {
    let built = build(spec)?;
    let table = parallel_table(built.complex(), theories)
        .map_err(|v| CmdError::Validation(v.to_string()))?;
    let rep = report::Report::from_table(&built, spec, &table, theories, reps);
    emit(&rep, format, report::render_table_text, report::render_table_csv)
}

/// Per-bidegree work fans out over the rayon pool (capped by
/// BCFORGE_THREADS); the assembled table is identical to the serial one.
fn parallel_table(
    c: &bcforge_core::BigradedComplex,
    theories: &[Theory],
) -> Result<CohomologyTable, bcforge_core::Violation> {
    use rayon::prelude::*;
    let support: Vec<(i64, i64)> = c.support().collect();
    let mut jobs: Vec<(Theory, (i64, i64))> = Vec::new();
    for &t in theories {
        if t != Theory::DeRham {
            for &bd in &support {
                jobs.push((t, bd));
            }
        }
    }
    let computed: Vec<(Theory, (i64, i64), usize)> = jobs
        .par_iter()
        .map(|&(t, (p, q))| {
            let dim = match t {
                Theory::Del => c.h_del(p, q).dimension,
                Theory::Delbar => c.h_delbar(p, q).dimension,
                Theory::BottChern => c.h_bott_chern(p, q).dimension,
                Theory::Aeppli => c.h_aeppli(p, q).dimension,
                Theory::E1 => c.frolicher_e1(p, q),
                Theory::PureType => c.h_pure_type(p, q),
                Theory::DeRham => unreachable!(),
            };
            (t, (p, q), dim)
        })
        .collect();
    let mut bigraded: std::collections::BTreeMap<Theory, std::collections::BTreeMap<(i64, i64), usize>> =
        std::collections::BTreeMap::new();
    for (t, bd, dim) in computed {
        bigraded.entry(t).or_default().insert(bd, dim);
    }
    let mut de_rham = std::collections::BTreeMap::new();
    if theories.contains(&Theory::DeRham) {
        let ks: Vec<i64> = c.total_degree_range().collect();
        let betti: Vec<(i64, usize)> = ks.par_iter().map(|&k| (k, c.betti(k))).collect();
        de_rham.extend(betti);
    }
    Ok(CohomologyTable {
        bigraded,
        de_rham,
        ddbar: c.ddbar_degrees()?,
    })
}

fn cmd_ddbar(spec: &ModelSpec, format: &str) -> Result<u8, CmdError> {
    let built = build(spec)?;
    let degrees = built
        .complex()
        .ddbar_degrees()
        .map_err(|v| CmdError::Validation(v.to_string()))?;
    let rep = report::Report::from_ddbar(spec, &degrees);
    emit(&rep, format, report::render_ddbar_text, report::render_ddbar_csv)
}

fn emit(
    rep: &report::Report,
    format: &str,
    text: impl Fn(&report::Report) -> String,
    csv: impl Fn(&report::Report) -> String,
) -> Result<u8, CmdError> {
    match format {
        "text" => print!("{}", text(rep)),
        "csv" => print!("{}", csv(rep)),
        "json" => println!("{}", rep.to_json()),
        other => return Err(CmdError::Usage(format!("unknown format `{other}`"))),
    }
    Ok(EXIT_OK)
}

fn cmd_compare(
    sub_spec: &ModelSpec,
    amb_spec: &ModelSpec,
    theories: &[Theory],
    format: &str,
) -> Result<u8, CmdError> {
    let sub = build(sub_spec)?;
    let ambient = build(amb_spec)?;
    let map: ComplexMap = models::subcomplex_inclusion(&sub, &ambient)
        .map_err(|e| CmdError::Validation(e.to_string()))?;
    let check = map.check_map();
    if !check.is_empty() {
        return Err(CmdError::Validation(format!(
            "inclusion is not a chain map: {}",
            check[0]
        )));
    }
    let mut rows = Vec::new();
    for &t in theories {
        match t {
            Theory::DeRham => {
                for k in ambient.complex().total_degree_range() {
                    let m = map
                        .induced_total_map(k)
                        .map_err(|e| CmdError::Validation(e.to_string()))?;
                    rows.push(report::CompareRow {
                        theory: t.token().into(),
                        p: k,
                        q: -1,
                        injective: m.injective,
                        surjective: m.surjective,
                    });
                }
            }
            _ => {
                let mut bds: Vec<(i64, i64)> = ambient.complex().support().collect();
                bds.sort_by_key(|&(p, q)| (p + q, -p));
                for (p, q) in bds {
                    let m = map
                        .induced_map(t, p, q)
                        .map_err(|e| CmdError::Validation(e.to_string()))?;
                    rows.push(report::CompareRow {
                        theory: t.token().into(),
                        p,
                        q,
                        injective: m.injective,
                        surjective: m.surjective,
                    });
                }
            }
        }
    }
    let rep = report::CompareReport {
        schema: "report-v1".into(),
        sub: sub_spec.name.clone(),
        ambient: amb_spec.name.clone(),
        rows,
    };
    match format {
        "text" => print!("{}", report::render_compare_text(&rep)),
        "csv" => print!("{}", report::render_compare_csv(&rep)),
        "json" => println!("{}", serde_json::to_string_pretty(&rep).unwrap()),
        other => return Err(CmdError::Usage(format!("unknown format `{other}`"))),
    }
    Ok(EXIT_OK)
}

/// Diffs every preset against the shipped expected tables and runs a short
/// seeded Laplacian self-check.
fn cmd_golden(seed: u64) -> Result<u8, CmdError> {
    use bcforge_core::hodge::LaplacianKind;
    let mut failures = 0usize;
    for name in models::preset_names() {
        let spec = models::preset(name).unwrap();
        let built = build(&spec)?;
        let c = built.complex();
        let expected = reference::reference_for(name).expect("reference table missing");
        // de Rham column.
        for (k, &want) in expected.de_rham.iter().enumerate() {
            let got = c.betti(k as i64);
            if got != want {
                println!("DIFF {name} dR k={k}: computed {got}, expected {want}");
                failures += 1;
            }
        }
        for (idx, &(p, q)) in reference::BIDEGREES_3.iter().enumerate() {
            if let Some(col) = &expected.delbar {
                let got = c.h_delbar(p, q).dimension;
                if got != col[idx] {
                    println!("DIFF {name} delbar ({p},{q}): computed {got}, expected {}", col[idx]);
                    failures += 1;
                }
            }
            if let Some(col) = &expected.bott_chern {
                let got = c.h_bott_chern(p, q).dimension;
                if got != col[idx] {
                    println!("DIFF {name} bc ({p},{q}): computed {got}, expected {}", col[idx]);
                    failures += 1;
                }
            }
        }
        let degrees = c
            .ddbar_degrees()
            .map_err(|v| CmdError::Validation(v.to_string()))?;
        for k in 1..=5i64 {
            let got = degrees.get(&k).copied().unwrap_or(0);
            let want = expected.ddbar[(k - 1) as usize];
            if got != want {
                println!("DIFF {name} ddbar k={k}: computed {got}, expected {want}");
                failures += 1;
            }
        }
        // Generator tables.
        if let Some(entries) = reference::expected_generators(name) {
            let diff = report::generator_table_diff(&built, &entries);
            for line in &diff {
                println!("DIFF {name} generators: {line}");
            }
            failures += diff.len();
        }
        // Structural, pairing, star-closure, and duality checks.
        for v in c.validate() {
            println!("DIFF {name} validate: {v}");
            failures += 1;
        }
        for v in built.paired.check_pd_axioms() {
            println!("DIFF {name} pd-axioms: {v}");
            failures += 1;
        }
        if !models::star_closure_check(&built, &spec) {
            println!("DIFF {name}: star closure fails");
            failures += 1;
        }
        for m in built.paired.star_duality_check() {
            println!("DIFF {name} duality: {m:?}");
            failures += 1;
        }
        println!("golden {name}: {}", if failures == 0 { "ok" } else { "diffs found" });
    }
    // Seeded Laplacian spot-check: kernel dimensions against quotients.
    for s in seed..seed + 3 {
        let model = bcforge_core::synthetic::random_paired_model(s);
        let c = model.complex();
        for (p, q) in c.support() {
            let pairs = [
                (LaplacianKind::Delbar, c.h_delbar(p, q).dimension),
                (LaplacianKind::BottChern, c.h_bott_chern(p, q).dimension),
            ];
            for (kind, want) in pairs {
                let got = model.paired.laplacian_kernel_dim(kind, p, q);
                if got != want {
                    println!("DIFF seed {s} {kind:?} ({p},{q}): kernel {got}, quotient {want}");
                    failures += 1;
                }
            }
        }
    }
    // Seeded transfer-theorem and splitting spot-checks.
    for s in seed..seed + 3 {
        let base = bcforge_core::synthetic::random_complex(s);
        let (ambient, map) = bcforge_core::synthetic::adjoin_acyclic_squares(&base, s + 1, 2);
        if !(map.rows_quasi_iso() && map.cols_quasi_iso()) {
            println!("DIFF seed {s}: square extension lost quasi-isomorphism");
            failures += 1;
        }
        for (p, q) in ambient.support() {
            match map.induced_bc_map(p, q) {
                Ok(induced) if induced.surjective => {}
                _ => {
                    println!("DIFF seed {s}: induced BC map not surjective at ({p},{q})");
                    failures += 1;
                }
            }
        }
        for (p, q) in base.support().collect::<Vec<_>>() {
            if base.dim(p, q) == 0 {
                continue;
            }
            // An admissible splitting input: the image of a sub element.
            let mut phi = vec![bcforge_core::Scalar::zero(); base.dim(p, q)];
            phi[0] = bcforge_core::Scalar::one();
            let phi = map.block(p, q).mul_vec(&phi);
            if map.split_modulo_delbar(p, q, &phi).is_err() {
                println!("DIFF seed {s}: splitting failed at ({p},{q})");
                failures += 1;
            }
            break;
        }
    }
    if failures > 0 {
        println!("golden: {failures} diffs");
        Ok(EXIT_INVARIANT)
    } else {
        println!("golden: all tables match");
        Ok(EXIT_OK)
    }
}
