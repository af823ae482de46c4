//! framecraft: compute, verify, and synthesize group frames for unitary
//! representations of finite groups from the command line.
//!
//! Reports are canonical JSON — object keys sorted, floats printed with 17
//! significant digits — so identical inputs produce byte-identical output.
//! Exit codes: 0 success, 1 rejected input / failed validation, 2 numeric
//! failure.

use clap::{Parser, Subcommand, ValueEnum};
use framecraft_core::group::find_isomorphism;
use framecraft_core::io::{self, Json};
use framecraft_core::linalg::hermitian_eigenvalues;
use framecraft_core::repr::transported_table;
use framecraft_core::{
    bracket, builtin_irrep_table, canonical_decomposition, frame_bounds_single,
    generated_range_function, gramian_blocks, gramian_oracle, harmonic_frame,
    isotypical_frame_check, multigen_frame_bounds, parseval_generator,
    permutation_frame_generator, translates_frame_bounds, two_transitive_tightness, zak,
    CosetDecomposition, DihedralBasis, Error, FiniteGroup, GroupAction, GroupFunction, GroupSpec,
    IrrepTable, LtwoG, RankSelection, RepVector, Result, SubgroupEmbedding, Tolerances,
    UnitaryRep, C64,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "framecraft",
    version,
    about = "Group frames for unitary representations of finite groups",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Relative cutoff for rank decisions on eigenvalues/singular values.
    #[arg(long, global = true, value_name = "EPS")]
    tol_rank: Option<f64>,
    /// General numeric comparison tolerance.
    #[arg(long, global = true, value_name = "EPS")]
    tol_numeric: Option<f64>,
    /// Scale of the positive-semidefiniteness acceptance threshold.
    #[arg(long, global = true, value_name = "EPS")]
    tol_psd: Option<f64>,
    /// Relative gap under which the two frame bounds count as equal.
    #[arg(long, global = true, value_name = "EPS")]
    tol_tight: Option<f64>,
    /// Seed for sampled validation checks (large Cayley tables).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Report rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Skip the self-verification step of construction subcommands.
    #[arg(long, global = true)]
    no_self_check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Compact canonical JSON.
    Json,
    /// Indented canonical JSON.
    PrettyText,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    /// Two-dimensional irreps use diagonal rotation generators.
    Complex,
    /// Two-dimensional irreps use real rotation matrices.
    Real,
}

impl BasisArg {
    fn dihedral(self) -> DihedralBasis {
        match self {
            BasisArg::Complex => DihedralBasis::Complex,
            BasisArg::Real => DihedralBasis::RealRotation,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a Cayley-table file (or builtin spec) and print a summary.
    ValidateGroup {
        /// Builtin spec ("cyclic:n", "dihedral:n", "symmetric:n",
        /// "product:<l>x<r>") or path to a group JSON file.
        source: String,
    },
    /// Validate an irrep table file over a group: unitarity, homomorphism
    /// property, Schur orthogonality, completeness.
    ValidateIrreps {
        /// Path to the irrep table JSON file.
        table: PathBuf,
        /// Group the table is over: builtin spec or group file.
        #[arg(long)]
        group: String,
    },
    /// Frame analysis of a (representation, vector) pair: bracket blocks,
    /// bounds in both normalizations, cyclicity, isotypical breakdown.
    Analyze {
        /// Path to the representation JSON file.
        rep: PathBuf,
        /// Path to the vector JSON file.
        vector: PathBuf,
        /// Group: builtin spec or group file.
        #[arg(long)]
        group: String,
        /// Irrep table file (required for non-builtin groups).
        #[arg(long)]
        irreps: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BasisArg::Complex)]
        basis: BasisArg,
    },
    /// Block-diagonalized orbit Gramian of a (representation, vector) pair.
    Gramian {
        rep: PathBuf,
        vector: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long)]
        irreps: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BasisArg::Complex)]
        basis: BasisArg,
        /// Also compute the dense orbit Gramian and compare spectra.
        #[arg(long)]
        compare_oracle: bool,
    },
    /// Construct the harmonic frame of a rank selection.
    Harmonic {
        /// Group: builtin spec or group file.
        group: String,
        /// Kept row counts per irrep, e.g. 0,1,1.
        #[arg(long, value_delimiter = ',', required = true)]
        ranks: Vec<usize>,
        #[arg(long, value_enum, default_value_t = BasisArg::Complex)]
        basis: BasisArg,
        #[arg(long)]
        irreps: Option<PathBuf>,
    },
    /// Construct the positive-type generator whose translates form a
    /// Parseval frame for the selected invariant subspace.
    Parseval {
        group: String,
        #[arg(long, value_delimiter = ',', required = true)]
        ranks: Vec<usize>,
        #[arg(long, value_enum, default_value_t = BasisArg::Complex)]
        basis: BasisArg,
        #[arg(long)]
        irreps: Option<PathBuf>,
    },
    /// Construct a tight-frame generator for the symmetric group permuting
    /// n points.
    Permframe {
        /// Number of points.
        n: usize,
        /// Optional mean-zero perturbation vector file (defaults to a
        /// canonical choice).
        #[arg(long)]
        psi: Option<PathBuf>,
    },
    /// Zak transform of a function with respect to a subgroup.
    Zak {
        /// Parent group: builtin spec or group file.
        group: String,
        /// Subgroup JSON file ({"member_indices": [...]}).
        subgroup: PathBuf,
        /// Function JSON file ({"values": [[re,im],...]}).
        function: PathBuf,
        /// Builtin spec the subgroup is isomorphic to (relabels its table).
        #[arg(long, conflicts_with = "subgroup_irreps")]
        subgroup_as: Option<String>,
        /// Irrep table file over the subgroup (in subgroup indexing).
        #[arg(long)]
        subgroup_irreps: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BasisArg::Complex)]
        basis: BasisArg,
    },
    /// Frame bounds of the subgroup-translate system of a function family.
    Translates {
        group: String,
        subgroup: PathBuf,
        /// One or more function JSON files.
        #[arg(required = true)]
        functions: Vec<PathBuf>,
        #[arg(long, conflicts_with = "subgroup_irreps")]
        subgroup_as: Option<String>,
        #[arg(long)]
        subgroup_irreps: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BasisArg::Complex)]
        basis: BasisArg,
    },
    /// Frame/Riesz duality report for a multi-generator spec file.
    Duality {
        /// Multi-generator spec JSON file.
        spec: PathBuf,
        /// Group override (builtin spec or group file); defaults to the
        /// "group" field of the spec file.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        irreps: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BasisArg::Complex)]
        basis: BasisArg,
    },
    /// Range function generated by a family of functions, with its canonical
    /// decomposition into irreducible invariant subspaces.
    Decompose {
        group: String,
        subgroup: PathBuf,
        #[arg(required = true)]
        functions: Vec<PathBuf>,
        #[arg(long, conflicts_with = "subgroup_irreps")]
        subgroup_as: Option<String>,
        #[arg(long)]
        subgroup_irreps: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BasisArg::Complex)]
        basis: BasisArg,
    },
}

struct CliConfig {
    tol: Tolerances,
    seed: u64,
    output: Option<PathBuf>,
    format: Format,
    self_check: bool,
}

impl CliConfig {
    fn from_cli(cli: &Cli) -> Result<CliConfig> {
        fn positive(name: &str, v: f64) -> Result<f64> {
            if v > 0.0 && v.is_finite() {
                Ok(v)
            } else {
                Err(Error::InvalidInput(format!(
                    "{name} must be a positive finite number, got {v}"
                )))
            }
        }
        let mut tol = Tolerances::default();
        if let Some(v) = cli.tol_rank {
            tol.rank = positive("--tol-rank", v)?;
        }
        if let Some(v) = cli.tol_numeric {
            tol.numeric = positive("--tol-numeric", v)?;
        }
        if let Some(v) = cli.tol_psd {
            tol.psd_scale = positive("--tol-psd", v)?;
        }
        if let Some(v) = cli.tol_tight {
            tol.tight = positive("--tol-tight", v)?;
        }
        Ok(CliConfig {
            tol,
            seed: cli.seed,
            output: cli.output.clone(),
            format: cli.format,
            self_check: !cli.no_self_check,
        })
    }
}

fn main() -> ExitCode {
    // Clap's default exit code for usage errors is 2, which this tool
    // reserves for numeric failures; remap them to the validation code.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_error = e.use_stderr();
            let _ = e.print();
            return if usage_error {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let cfg = match CliConfig::from_cli(&cli) {
        Ok(cfg) => cfg,
        Err(e) => return fail(&e),
    };
    match run(&cli.cmd, &cfg) {
        Ok((json, code)) => {
            if let Err(e) = emit(&cfg, &json) {
                return fail(&e);
            }
            ExitCode::from(code)
        }
        Err(e) => fail(&e),
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("{}", io::error_json(e).to_compact());
    ExitCode::from(if e.is_numeric() { 2 } else { 1 })
}

fn emit(cfg: &CliConfig, json: &Json) -> Result<()> {
    let text = match cfg.format {
        Format::Json => {
            let mut t = json.to_compact();
            t.push('\n');
            t
        }
        Format::PrettyText => json.to_pretty(),
    };
    match &cfg.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: &Cmd, cfg: &CliConfig) -> Result<(Json, u8)> {
    match cmd {
        Cmd::ValidateGroup { source } => {
            let group = load_group(source, cfg)?;
            Ok((io::group_summary_json(&group), 0))
        }
        Cmd::ValidateIrreps { table, group } => cmd_validate_irreps(table, group, cfg),
        Cmd::Analyze {
            rep,
            vector,
            group,
            irreps,
            basis,
        } => cmd_analyze(rep, vector, group, irreps.as_deref(), *basis, cfg),
        Cmd::Gramian {
            rep,
            vector,
            group,
            irreps,
            basis,
            compare_oracle,
        } => cmd_gramian(rep, vector, group, irreps.as_deref(), *basis, *compare_oracle, cfg),
        Cmd::Harmonic {
            group,
            ranks,
            basis,
            irreps,
        } => cmd_harmonic(group, ranks, *basis, irreps.as_deref(), cfg),
        Cmd::Parseval {
            group,
            ranks,
            basis,
            irreps,
        } => cmd_parseval(group, ranks, *basis, irreps.as_deref(), cfg),
        Cmd::Permframe { n, psi } => cmd_permframe(*n, psi.as_deref(), cfg),
        Cmd::Zak {
            group,
            subgroup,
            function,
            subgroup_as,
            subgroup_irreps,
            basis,
        } => {
            let env = SubgroupEnv::load(
                group,
                subgroup,
                subgroup_as.as_deref(),
                subgroup_irreps.as_deref(),
                *basis,
                cfg,
            )?;
            let f = env.function(function)?;
            let z = zak(&f, &env.ctx, &env.table)?;
            Ok((io::zak_json(&z), 0))
        }
        Cmd::Translates {
            group,
            subgroup,
            functions,
            subgroup_as,
            subgroup_irreps,
            basis,
        } => {
            let env = SubgroupEnv::load(
                group,
                subgroup,
                subgroup_as.as_deref(),
                subgroup_irreps.as_deref(),
                *basis,
                cfg,
            )?;
            let family = env.family(functions)?;
            let report = translates_frame_bounds(&family, &env.ctx, &env.table, &cfg.tol)?;
            Ok((io::frame_report_json(&report, &env.table), 0))
        }
        Cmd::Duality {
            spec,
            group,
            irreps,
            basis,
        } => cmd_duality(spec, group.as_deref(), irreps.as_deref(), *basis, cfg),
        Cmd::Decompose {
            group,
            subgroup,
            functions,
            subgroup_as,
            subgroup_irreps,
            basis,
        } => {
            let env = SubgroupEnv::load(
                group,
                subgroup,
                subgroup_as.as_deref(),
                subgroup_irreps.as_deref(),
                *basis,
                cfg,
            )?;
            let family = env.family(functions)?;
            let j = generated_range_function(&family, &env.ctx, &env.table, &cfg.tol)?;
            let comps = canonical_decomposition(&j, &env.ctx)?;
            Ok((
                Json::obj(vec![
                    ("range_function", io::range_function_json(&j)),
                    ("components", io::components_json(&comps, &env.table)),
                ]),
                0,
            ))
        }
    }
}

// ---------------------------------------------------------------------------
// input loading

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

/// A group source is a builtin spec unless the string names an existing file.
fn load_group(source: &str, cfg: &CliConfig) -> Result<Arc<FiniteGroup>> {
    if Path::new(source).exists() {
        let file: io::GroupFile = io::parse_json(&read_text(Path::new(source))?)?;
        io::group_from_file_seeded(&file, cfg.seed)
    } else {
        GroupSpec::parse(source)?.build()
    }
}

/// Resolve a group plus an irrep table over it: builtin specs derive their
/// table unless --irreps overrides; group files always need --irreps.
fn resolve_group_table(
    source: &str,
    irreps: Option<&Path>,
    basis: BasisArg,
    cfg: &CliConfig,
) -> Result<(Arc<FiniteGroup>, Arc<IrrepTable>)> {
    if Path::new(source).exists() {
        let group = load_group(source, cfg)?;
        let path = irreps.ok_or_else(|| {
            Error::InvalidInput("a group file needs an irrep table: pass --irreps".into())
        })?;
        let table = io::table_from_file(&io::parse_json(&read_text(path)?)?, group.clone())?;
        Ok((group, table))
    } else {
        let spec = GroupSpec::parse(source)?;
        match irreps {
            None => builtin_irrep_table(&spec, basis.dihedral()),
            Some(path) => {
                let group = spec.build()?;
                let table =
                    io::table_from_file(&io::parse_json(&read_text(path)?)?, group.clone())?;
                Ok((group, table))
            }
        }
    }
}

/// Everything the subgroup-based subcommands share: the coset context and an
/// irrep table over the induced subgroup.
struct SubgroupEnv {
    parent: Arc<FiniteGroup>,
    ctx: LtwoG,
    table: Arc<IrrepTable>,
}

impl SubgroupEnv {
    fn load(
        group: &str,
        subgroup: &Path,
        subgroup_as: Option<&str>,
        subgroup_irreps: Option<&Path>,
        basis: BasisArg,
        cfg: &CliConfig,
    ) -> Result<SubgroupEnv> {
        let parent = load_group(group, cfg)?;
        let sub: io::SubgroupFile = io::parse_json(&read_text(subgroup)?)?;
        let emb = SubgroupEmbedding::new(parent.clone(), &sub.member_indices)?;
        let induced = emb.induced().clone();
        let table = subgroup_table(&induced, subgroup_as, subgroup_irreps, basis)?;
        let ctx = LtwoG::new(CosetDecomposition::new(emb)?);
        Ok(SubgroupEnv { parent, ctx, table })
    }

    fn function(&self, path: &Path) -> Result<GroupFunction> {
        let file: io::VectorFile = io::parse_json(&read_text(path)?)?;
        GroupFunction::new(self.parent.clone(), io::values_from_file(&file))
    }

    fn family(&self, paths: &[PathBuf]) -> Result<Vec<GroupFunction>> {
        paths.iter().map(|p| self.function(p)).collect()
    }
}

/// An irrep table over an induced subgroup: from a file, by relabeling a
/// builtin table across an isomorphism, or (fallback) by detecting a cyclic
/// subgroup.
fn subgroup_table(
    induced: &Arc<FiniteGroup>,
    subgroup_as: Option<&str>,
    subgroup_irreps: Option<&Path>,
    basis: BasisArg,
) -> Result<Arc<IrrepTable>> {
    if let Some(path) = subgroup_irreps {
        return io::table_from_file(&io::parse_json(&read_text(path)?)?, induced.clone());
    }
    if let Some(spec_str) = subgroup_as {
        let spec = GroupSpec::parse(spec_str)?;
        let (builtin, table) = builtin_irrep_table(&spec, basis.dihedral())?;
        let iso = find_isomorphism(induced, &builtin).ok_or_else(|| {
            Error::InvalidInput(format!("the subgroup is not isomorphic to {spec_str}"))
        })?;
        return transported_table(&table, induced.clone(), &iso);
    }
    // no hint: a cyclic subgroup can be relabeled automatically
    let spec = GroupSpec::Cyclic(induced.order());
    let (builtin, table) = builtin_irrep_table(&spec, basis.dihedral())?;
    match find_isomorphism(induced, &builtin) {
        Some(iso) => transported_table(&table, induced.clone(), &iso),
        None => Err(Error::InvalidInput(
            "cannot derive irreps for a non-cyclic subgroup automatically; \
             pass --subgroup-as <builtin spec> or --subgroup-irreps <table.json>"
                .into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// subcommand bodies

fn cmd_validate_irreps(table_path: &Path, group: &str, cfg: &CliConfig) -> Result<(Json, u8)> {
    let group = load_group(group, cfg)?;
    let file: io::IrrepTableFile = io::parse_json(&read_text(table_path)?)?;
    let mut per_irrep = Vec::new();
    let mut all_valid = true;
    for entry in &file.irreps {
        let mats = io::rep_matrices_from_file(&io::RepFile {
            dim: entry.dim,
            matrices: entry.matrices.clone(),
        })?;
        let report = framecraft_core::validate_rep_matrices(&group, &mats, &cfg.tol)?;
        all_valid &= report.is_valid();
        per_irrep.push((entry.name.clone(), io::rep_report_json(&report)));
    }
    let table_report = if all_valid {
        let mut irreps = Vec::new();
        let mut names = Vec::new();
        for entry in &file.irreps {
            let mats = io::rep_matrices_from_file(&io::RepFile {
                dim: entry.dim,
                matrices: entry.matrices.clone(),
            })?;
            irreps.push(UnitaryRep::new(group.clone(), mats)?);
            names.push(entry.name.clone());
        }
        let report = framecraft_core::validate_irrep_table(&group, &irreps, &names, &cfg.tol);
        all_valid &= report.is_valid();
        io::table_report_json(&report)
    } else {
        Json::Null
    };
    let mut entries = vec![
        (
            "per_irrep".to_string(),
            Json::Object(per_irrep.into_iter().collect()),
        ),
        ("table".to_string(), table_report),
        ("is_valid".to_string(), Json::Bool(all_valid)),
    ];
    if !all_valid {
        entries.push((
            "error".to_string(),
            io::error_json(&Error::InvalidTable(
                "irrep table failed validation".into(),
            )),
        ));
    }
    Ok((Json::Object(entries), if all_valid { 0 } else { 1 }))
}

fn load_rep_vector(
    rep_path: &Path,
    vector_path: &Path,
    group: &Arc<FiniteGroup>,
) -> Result<RepVector> {
    let rep_file: io::RepFile = io::parse_json(&read_text(rep_path)?)?;
    let rep = Arc::new(io::rep_from_file(&rep_file, group.clone())?);
    let vec_file: io::VectorFile = io::parse_json(&read_text(vector_path)?)?;
    let values = io::values_from_file(&vec_file);
    RepVector::from_slice(rep, &values)
}

fn cmd_analyze(
    rep_path: &Path,
    vector_path: &Path,
    group: &str,
    irreps: Option<&Path>,
    basis: BasisArg,
    cfg: &CliConfig,
) -> Result<(Json, u8)> {
    let (group, table) = resolve_group_table(group, irreps, basis, cfg)?;
    let f = load_rep_vector(rep_path, vector_path, &group)?;
    let b = bracket(&f, &f, &table)?;
    let report = frame_bounds_single(&f, &table, &cfg.tol)?;
    let cyc = framecraft_core::is_cyclic(&f, &table, &cfg.tol)?;
    let iso = isotypical_frame_check(&f, &table, &cfg.tol)?;
    Ok((
        Json::obj(vec![
            ("bracket", io::bracket_json(&b)),
            ("frame", io::frame_report_json(&report, &table)),
            ("cyclicity", io::cyclicity_json(&cyc, &table)),
            ("isotypical", io::isotypical_json(&iso, &table)),
        ]),
        0,
    ))
}

fn cmd_gramian(
    rep_path: &Path,
    vector_path: &Path,
    group: &str,
    irreps: Option<&Path>,
    basis: BasisArg,
    compare_oracle: bool,
    cfg: &CliConfig,
) -> Result<(Json, u8)> {
    let (group, table) = resolve_group_table(group, irreps, basis, cfg)?;
    let f = load_rep_vector(rep_path, vector_path, &group)?;
    let blocks = gramian_blocks(&f, &table)?;
    let mut entries = match io::gramian_json(&blocks)? {
        Json::Object(v) => v,
        other => return Ok((other, 0)),
    };
    if compare_oracle {
        let pooled = blocks.pooled_eigenvalues()?;
        let oracle = gramian_oracle(&f);
        let oracle_eigs = hermitian_eigenvalues(&oracle)?;
        let max_deviation = pooled
            .iter()
            .zip(&oracle_eigs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        let scale = oracle_eigs.last().copied().unwrap_or(0.0).abs().max(1.0);
        entries.push((
            "oracle".to_string(),
            Json::obj(vec![
                (
                    "eigenvalues",
                    Json::Array(oracle_eigs.iter().map(|&x| Json::Float(x)).collect()),
                ),
                ("max_deviation", Json::Float(max_deviation)),
                (
                    "consistent",
                    Json::Bool(max_deviation <= cfg.tol.spectrum * scale),
                ),
            ]),
        ));
    }
    Ok((Json::Object(entries), 0))
}

fn cmd_harmonic(
    group: &str,
    ranks: &[usize],
    basis: BasisArg,
    irreps: Option<&Path>,
    cfg: &CliConfig,
) -> Result<(Json, u8)> {
    let (group, table) = resolve_group_table(group, irreps, basis, cfg)?;
    let sel = RankSelection::new(table.clone(), ranks.to_vec())?;
    let fm = harmonic_frame(&sel)?;
    let mut entries = vec![
        ("frame".to_string(), io::frame_matrix_json(&fm)),
        (
            "discrete_bound".to_string(),
            Json::Float(group.order() as f64),
        ),
    ];
    if cfg.self_check {
        let deviation = fm.parseval_deviation();
        if deviation > cfg.tol.tight {
            return Err(Error::Numeric(format!(
                "harmonic frame failed self-verification: parseval deviation {deviation:.3e}"
            )));
        }
        entries.push((
            "self_check".to_string(),
            Json::obj(vec![
                ("parseval_deviation", Json::Float(deviation)),
                ("tight", Json::Bool(true)),
                ("passed", Json::Bool(true)),
            ]),
        ));
    }
    Ok((Json::Object(entries), 0))
}

fn cmd_parseval(
    group: &str,
    ranks: &[usize],
    basis: BasisArg,
    irreps: Option<&Path>,
    cfg: &CliConfig,
) -> Result<(Json, u8)> {
    let (_group, table) = resolve_group_table(group, irreps, basis, cfg)?;
    let sel = RankSelection::new(table.clone(), ranks.to_vec())?;
    let f = parseval_generator(&sel)?;
    let mut entries = vec![
        ("generator".to_string(), io::group_function_json(&f)),
        (
            "ranks".to_string(),
            Json::Array(ranks.iter().map(|&r| Json::int(r)).collect()),
        ),
    ];
    if cfg.self_check {
        let inv = f.involution();
        let involution_deviation = max_value_deviation(&f, &inv);
        let conv = f.convolve(&f)?;
        let idempotent_deviation = max_value_deviation(&f, &conv);
        let passed =
            involution_deviation <= cfg.tol.tight && idempotent_deviation <= cfg.tol.tight;
        if !passed {
            return Err(Error::Numeric(format!(
                "generator failed self-verification: f=f* off by {involution_deviation:.3e}, \
                 f=f*f off by {idempotent_deviation:.3e}"
            )));
        }
        entries.push((
            "self_check".to_string(),
            Json::obj(vec![
                ("involution_deviation", Json::Float(involution_deviation)),
                ("idempotent_deviation", Json::Float(idempotent_deviation)),
                ("passed", Json::Bool(true)),
            ]),
        ));
    }
    Ok((Json::Object(entries), 0))
}

fn max_value_deviation(a: &GroupFunction, b: &GroupFunction) -> f64 {
    a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn cmd_permframe(n: usize, psi: Option<&Path>, cfg: &CliConfig) -> Result<(Json, u8)> {
    let psi_values: Option<Vec<C64>> = match psi {
        Some(path) => {
            let file: io::VectorFile = io::parse_json(&read_text(path)?)?;
            Some(io::values_from_file(&file))
        }
        None => None,
    };
    let f = permutation_frame_generator(n, psi_values.as_deref(), &cfg.tol)?;
    let action = GroupAction::natural_symmetric(n)?;
    let mut entries = vec![
        (
            "generator".to_string(),
            Json::Array(f.iter().map(|&z| Json::complex(z)).collect()),
        ),
        ("n_points".to_string(), Json::int(n)),
        (
            "group_order".to_string(),
            Json::int(action.group().order()),
        ),
    ];
    if cfg.self_check {
        let report = two_transitive_tightness(&action, &f, &cfg.tol)?;
        if !(report.criterion_tight && report.spectrum_tight && report.consistent) {
            return Err(Error::Numeric(
                "constructed generator failed the tightness self-verification".into(),
            ));
        }
        let bound = report.discrete_bounds.map_or(0.0, |(_, b)| b);
        entries.push((
            "verification".to_string(),
            io::two_transitive_json(&report),
        ));
        entries.push((
            "verdict".to_string(),
            Json::string(&format!("tight, discrete bound {}", fmt_bound(bound))),
        ));
    } else {
        entries.push(("verdict".to_string(), Json::string("unverified")));
    }
    Ok((Json::Object(entries), 0))
}

fn fmt_bound(x: f64) -> String {
    if (x - x.round()).abs() < 1e-9 && x.abs() < 1e15 {
        format!("{}", x.round() as i64)
    } else {
        format!("{x:.6}")
    }
}

fn cmd_duality(
    spec_path: &Path,
    group: Option<&str>,
    irreps: Option<&Path>,
    basis: BasisArg,
    cfg: &CliConfig,
) -> Result<(Json, u8)> {
    let file: io::MultiGenFile = io::parse_json(&read_text(spec_path)?)?;
    let source = match (group, &file.group) {
        (Some(s), _) => s.to_string(),
        (None, Some(s)) => s.clone(),
        (None, None) => {
            return Err(Error::InvalidInput(
                "no group named: pass --group or add a \"group\" field to the spec file".into(),
            ))
        }
    };
    let (_group, table) = resolve_group_table(&source, irreps, basis, cfg)?;
    let spec = io::multigen_from_file(&file, &table)?;
    let report = multigen_frame_bounds(&spec, None, &cfg.tol)?;
    Ok((io::riesz_report_json(&report, &table), 0))
}
