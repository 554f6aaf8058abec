//! `terwilliger`: build groups from JSON specs and report on their class
//! schemes, Terwilliger algebras and family classification.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use group_terwilliger::catalog::GroupSpec;
use group_terwilliger::classify::{
    camina_pair_check, camina_structure_checks, cross_check_scheme, CaminaPairCheck,
    CaminaStructureReport, CrossCheck,
};
use group_terwilliger::group::{derived_subgroup, FiniteGroup};
use group_terwilliger::linalg::rat::to_fraction_string;
use group_terwilliger::linalg::RatMatrix;
use group_terwilliger::scheme::{build_scheme, verify_scheme_axioms, SchemeReport, SchemeVerification};
use group_terwilliger::terwilliger::{run_pipeline, TwaReport, DEFAULT_ENTRY_CAP};
use group_terwilliger::Error;

#[derive(Parser, Debug)]
#[command(name = "terwilliger", version, about = "Terwilliger algebras of finite group schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class scheme report: class sizes, intersection-number triples, AC verdict.
    Scheme(SingleArgs),
    /// Full pipeline: closure of T, center, Wedderburn components.
    Twa(SingleArgs),
    /// Family prediction cross-checked against the measured AC verdict.
    Classify(SingleArgs),
    /// Classification census over a file of specs, one JSON object per line.
    Batch(BatchArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Refuse groups larger than this.
    #[arg(long, default_value_t = 512, value_parser = clap::value_parser!(u64).range(1..))]
    max_order: u64,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run the optional expensive checks.
    #[arg(long)]
    deep_verify: bool,
}

#[derive(Args, Debug)]
struct SingleArgs {
    /// Group spec: inline JSON or a path to a JSON file.
    spec: String,
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Emit::Report)]
    emit: Emit,
    /// Directory for CSV matrices (`--emit matrices|idempotents`).
    #[arg(long)]
    dump_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// File with one JSON spec per line; blank lines and `#` comments are skipped.
    specs: PathBuf,
    #[command(flatten)]
    common: Common,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Emit {
    Report,
    Tensor,
    Matrices,
    Idempotents,
}

/// Failure with its exit code.
#[derive(Debug)]
enum Failure {
    /// Checks ran but something did not verify.
    Verification,
    Usage(String),
    Resource(String),
    Runtime(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification | Failure::Runtime(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Resource(_) => 3,
        }
    }

    /// Errors while building the group are spec errors unless they are limits.
    fn from_build(e: Error) -> Self {
        if e.is_resource_limit() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }

    fn from_run(e: Error) -> Self {
        if e.is_resource_limit() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Runtime(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Scheme(a) => cmd_scheme(a),
        Command::Twa(a) => cmd_twa(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Batch(a) => cmd_batch(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(Failure::Verification.code()),
        Err(f) => {
            match &f {
                Failure::Verification => {}
                Failure::Usage(m) | Failure::Resource(m) | Failure::Runtime(m) => {
                    eprintln!("error: {m}")
                }
            }
            ExitCode::from(f.code())
        }
    }
}

fn parse_spec(text: &str) -> Result<GroupSpec, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("invalid group spec: {e}")))
}

fn load_spec(arg: &str) -> Result<GroupSpec, Failure> {
    if arg.trim_start().starts_with('{') {
        return parse_spec(arg);
    }
    let text = fs::read_to_string(arg)
        .map_err(|e| Failure::Usage(format!("cannot read spec file {arg}: {e}")))?;
    parse_spec(&text)
}

fn build(spec: &GroupSpec, common: &Common) -> Result<FiniteGroup, Failure> {
    let max = usize::try_from(common.max_order).unwrap_or(usize::MAX);
    spec.build(max).map_err(Failure::from_build)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn write_json<T: Serialize>(out: Option<&Path>, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::Runtime(e.to_string()))?;
    text.push('\n');
    write_output(out, &text)
}

fn matrix_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(to_fraction_string).collect()).collect()
}

fn dump_dir(args: &SingleArgs) -> Result<Option<&Path>, Failure> {
    let dir = args.dump_dir.as_deref();
    if let Some(d) = dir {
        fs::create_dir_all(d)?;
    }
    Ok(dir)
}

#[derive(Serialize)]
struct SchemeOutput {
    spec: GroupSpec,
    #[serde(flatten)]
    report: SchemeReport,
    axioms: SchemeVerification,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrices: Option<Vec<MatrixPair>>,
}

#[derive(Serialize)]
struct MatrixPair {
    class: usize,
    adjacency: Vec<Vec<String>>,
    dual_idempotent: Vec<Vec<String>>,
}

fn cmd_scheme(args: &SingleArgs) -> Outcome {
    let spec = load_spec(&args.spec)?;
    let g = build(&spec, &args.common)?;
    let scheme = build_scheme(&g);
    let axioms = verify_scheme_axioms(&scheme, args.common.deep_verify);
    let mut matrices = None;
    if args.emit == Emit::Matrices {
        let dir = dump_dir(args)?;
        let mut pairs = Vec::new();
        for i in 0..scheme.rank() {
            let a = scheme.adjacency_matrix(i).map_err(Failure::from_run)?;
            let e = scheme.dual_idempotent(i).map_err(Failure::from_run)?;
            if let Some(d) = dir {
                fs::write(d.join(format!("A_{i}.csv")), a.to_csv())?;
                fs::write(d.join(format!("Estar_{i}.csv")), e.to_csv())?;
            }
            pairs.push(MatrixPair {
                class: i,
                adjacency: matrix_strings(&a),
                dual_idempotent: matrix_strings(&e),
            });
        }
        matrices = Some(pairs);
    }
    let passed = axioms.all_passed();
    let output = SchemeOutput {
        spec,
        report: scheme.report(args.emit == Emit::Tensor),
        axioms,
        matrices,
    };
    write_json(args.common.out.as_deref(), &output)?;
    Ok(passed)
}

#[derive(Serialize)]
struct TwaOutput {
    spec: GroupSpec,
    #[serde(flatten)]
    report: TwaReport,
    axioms: SchemeVerification,
    #[serde(skip_serializing_if = "Option::is_none")]
    idempotents: Option<Vec<Vec<Vec<String>>>>,
}

fn cmd_twa(args: &SingleArgs) -> Outcome {
    let spec = load_spec(&args.spec)?;
    let g = build(&spec, &args.common)?;
    let scheme = build_scheme(&g);
    let axioms = verify_scheme_axioms(&scheme, args.common.deep_verify);
    let pipeline = run_pipeline(scheme, DEFAULT_ENTRY_CAP).map_err(Failure::from_run)?;
    let report = pipeline.report();
    let mut idempotents = None;
    if matches!(args.emit, Emit::Idempotents | Emit::Matrices) {
        let dir = dump_dir(args)?;
        let w = &pipeline.wedderburn;
        let mut all = Vec::new();
        for k in 0..w.components.len() {
            let f = w.idempotent_dense(k);
            if let Some(d) = dir {
                fs::write(d.join(format!("idempotent_{k}.csv")), f.to_csv())?;
            }
            all.push(matrix_strings(&f));
        }
        idempotents = Some(all);
    }
    let passed = axioms.all_passed() && report.idempotents_verified;
    write_json(
        args.common.out.as_deref(),
        &TwaOutput {
            spec,
            report,
            axioms,
            idempotents,
        },
    )?;
    Ok(passed)
}

#[derive(Serialize)]
struct ClassifyOutput {
    spec: GroupSpec,
    label: String,
    order: usize,
    class_sizes: Vec<usize>,
    #[serde(flatten)]
    check: CrossCheck,
    /// `(G, G')` checked through every equivalent condition, for nonabelian `G`.
    camina_pair: Option<CaminaPairCheck>,
    /// Structure of a nonabelian Camina p-group.
    camina_structure: Option<CaminaStructureReport>,
}

fn classify_one(spec: GroupSpec, g: &FiniteGroup, deep: bool) -> Result<ClassifyOutput, Failure> {
    let scheme = build_scheme(g);
    let check = cross_check_scheme(&scheme);
    let camina_pair = if g.is_abelian() {
        None
    } else {
        Some(camina_pair_check(&scheme, &derived_subgroup(g), deep).map_err(Failure::from_run)?)
    };
    let camina_structure = if check.verdict.is_camina_p_group {
        Some(camina_structure_checks(g).map_err(Failure::from_run)?)
    } else {
        None
    };
    Ok(ClassifyOutput {
        spec,
        label: g.label().to_string(),
        order: g.order(),
        class_sizes: scheme.class_sizes().to_vec(),
        check,
        camina_pair,
        camina_structure,
    })
}

impl ClassifyOutput {
    fn passed(&self) -> bool {
        self.check.consistent
            && self.camina_pair.as_ref().is_none_or(CaminaPairCheck::consistent)
            && self.camina_structure.as_ref().is_none_or(CaminaStructureReport::passed)
    }
}

fn cmd_classify(args: &SingleArgs) -> Outcome {
    let spec = load_spec(&args.spec)?;
    let g = build(&spec, &args.common)?;
    let out = classify_one(spec, &g, args.common.deep_verify)?;
    write_json(args.common.out.as_deref(), &out)?;
    Ok(out.passed())
}

#[derive(Serialize, Default)]
struct CensusRow {
    line: usize,
    spec: String,
    label: String,
    order: Option<usize>,
    classes: Option<usize>,
    predicted_ac: Option<bool>,
    measured_ac: Option<bool>,
    class_product_property: Option<bool>,
    camina_p_group: Option<bool>,
    frobenius_field_family: Option<bool>,
    consistent: Option<bool>,
    error: String,
}

fn read_batch(path: &Path) -> Result<Vec<(usize, String, GroupSpec)>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut specs = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let spec = parse_spec(line).map_err(|f| match f {
            Failure::Usage(m) => Failure::Usage(format!("line {}: {m}", n + 1)),
            other => other,
        })?;
        specs.push((n + 1, line.to_string(), spec));
    }
    Ok(specs)
}

fn census_row(line: usize, text: String, spec: GroupSpec, common: &Common) -> CensusRow {
    let mut row = CensusRow {
        line,
        spec: text,
        ..CensusRow::default()
    };
    let result = build(&spec, common).and_then(|g| classify_one(spec, &g, common.deep_verify));
    match result {
        Ok(out) => {
            row.label = out.label.clone();
            row.order = Some(out.order);
            row.classes = Some(out.class_sizes.len());
            row.predicted_ac = Some(out.check.verdict.predicted_ac);
            row.measured_ac = Some(out.check.measured_ac);
            row.class_product_property = Some(out.check.class_product_property);
            row.camina_p_group = Some(out.check.verdict.is_camina_p_group);
            row.frobenius_field_family = Some(out.check.verdict.is_frobenius_field_family);
            row.consistent = Some(out.passed());
        }
        Err(f) => {
            row.error = match f {
                Failure::Verification => "verification failed".to_string(),
                Failure::Usage(m) | Failure::Resource(m) | Failure::Runtime(m) => m,
            }
        }
    }
    row
}

fn cmd_batch(args: &BatchArgs) -> Outcome {
    let specs = read_batch(&args.specs)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    let rows: Vec<CensusRow> = pool.install(|| {
        specs
            .into_par_iter()
            .map(|(line, text, spec)| census_row(line, text, spec, &args.common))
            .collect()
    });
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        writer.serialize(row).map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| Failure::Runtime(e.to_string()))?;
    write_output(args.common.out.as_deref(), &String::from_utf8_lossy(&bytes))?;
    Ok(rows.iter().all(|r| r.error.is_empty() && r.consistent == Some(true)))
}
