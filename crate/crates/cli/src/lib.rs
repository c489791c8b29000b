//! The `orbistruct` command line.
//!
//! Exit codes: 0 on success, 2 for usage, parse and validation errors,
//! 1 for anything else (cap exceeded, internal failures).

pub mod group_arg;
pub mod report;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbistruct::substructure::{analyze_chain_with, AnalysisOptions};
use orbistruct::{parse_product, render, sweep, Catalog, GroupError, Limits, SubgroupChain};

use group_arg::{require_inside, require_normalizing, GroupArg};
use report::{analysis_text, sweep_text, AnalysisDoc, ChainNames, Payload, ReportDocument, SweepDoc, SCHEMA_VERSION};

#[derive(Debug)]
pub struct CliError {
    pub validation: bool,
    pub message: String,
}

impl CliError {
    pub fn validation(message: impl Into<String>) -> Self {
        Self {
            validation: true,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.validation {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        let validation = matches!(
            e,
            GroupError::Parse { .. }
                | GroupError::InvalidPermutation(_)
                | GroupError::DegreeMismatch { .. }
                | GroupError::NotSubgroup(_)
                | GroupError::NotInGroup(_)
                | GroupError::NotStabilizing(_)
                | GroupError::UnknownGroup(_)
                | GroupError::Catalog { .. }
        );
        Self {
            validation,
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "orbistruct",
    version,
    about = "Inherited orbifold substructures of group-algebra chart chains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze one chain Δ ≤ B ≤ Γ.
    Analyze(AnalyzeArgs),
    /// Analyze every chain of a group, one per conjugacy class.
    Sweep(SweepArgs),
    /// Inspect the built-in group catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Multiply permutations given in cycle notation.
    Perm(PermArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Catalog name or generator list such as "(1 2 3);(1 2)(3 4)".
    #[arg(long)]
    pub gamma: String,
    #[arg(long)]
    pub b: String,
    #[arg(long)]
    pub delta: String,
    /// Alternative Λ for ℝ[Δ] ⊆ ℝ[Γ]; must normalize Δ.
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    pub group: String,
    /// Keep only chains with Γ_Q^O ≇ Γ_Q^P.
    #[arg(long)]
    pub only_incompatible: bool,
    /// Keep only chains where some level fails to be saturated.
    #[arg(long)]
    pub only_unsaturated: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List,
    Show { name: String },
}

#[derive(Debug, Args)]
pub struct PermArgs {
    /// Factors, rightmost applied first.
    #[arg(long, num_args = 1.., required = true, allow_hyphen_values = true)]
    pub product: Vec<String>,
    #[arg(long)]
    pub degree: Option<usize>,
}

/// Parses `args` (program name first) and runs the command. Returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return 2;
            }
            let _ = write!(out, "{rendered}");
            return 0;
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli.command, echo, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: &Command, echo: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let limits = Limits::from_env().map_err(|e| CliError::validation(e.to_string()))?;
    let catalog = Catalog::builtin();
    let text = match command {
        Command::Analyze(a) => {
            let doc = analyze_document(a, &catalog, &limits, echo)?;
            let Payload::Analysis(analysis) = &doc.payload else {
                unreachable!("analyze builds an analysis payload")
            };
            for w in &analysis.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            emit(&doc, a.format)
        }
        Command::Sweep(s) => {
            let doc = sweep_document(s, &catalog, &limits, echo)?;
            let Payload::Sweep(swept) = &doc.payload else {
                unreachable!("sweep builds a sweep payload")
            };
            for w in &swept.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            emit(&doc, s.format)
        }
        Command::Catalog(CatalogCommand::List) => {
            let mut s = String::new();
            for e in catalog.entries() {
                let order = e.group_capped(&limits)?.order();
                s.push_str(&format!("{}\tdegree {}\torder {order}\n", e.name, e.degree));
            }
            s
        }
        Command::Catalog(CatalogCommand::Show { name }) => {
            let entry = catalog
                .get(name)
                .ok_or_else(|| CliError::from(GroupError::UnknownGroup(name.clone())))?;
            let g = entry.group_capped(&limits)?;
            format!(
                "{}\ndegree {}\norder {}\nabelian {}\ncenter order {}\nlabel {}\ngenerators {}\n",
                entry.name,
                entry.degree,
                g.order(),
                g.is_abelian(),
                g.center().order(),
                orbistruct::iso::named_iso_class_capped(&g, limits.isomorphism),
                entry.generators.join(";"),
            )
        }
        Command::Perm(p) => {
            let factors: Vec<&str> = p.product.iter().map(String::as_str).collect();
            let product = parse_product(&factors, p.degree)?;
            format!("{}\n", render(&product))
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| CliError {
        validation: false,
        message: e.to_string(),
    })
}

fn emit(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("report documents serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            match &doc.payload {
                Payload::Analysis(a) => analysis_text(a, &mut s),
                Payload::Sweep(w) => sweep_text(w, &mut s),
            }
            s
        }
    }
}

pub fn analyze_document(
    args: &AnalyzeArgs,
    catalog: &Catalog,
    limits: &Limits,
    echo: Vec<String>,
) -> Result<ReportDocument, CliError> {
    let gamma_arg = GroupArg::parse(&args.gamma, catalog, limits)?;
    let b_arg = GroupArg::parse(&args.b, catalog, limits)?;
    let delta_arg = GroupArg::parse(&args.delta, catalog, limits)?;
    let lambda_arg = args
        .lambda
        .as_deref()
        .map(|l| GroupArg::parse(l, catalog, limits))
        .transpose()?;
    let degree = [&gamma_arg, &b_arg, &delta_arg]
        .into_iter()
        .chain(lambda_arg.as_ref())
        .map(GroupArg::degree)
        .max()
        .unwrap_or(1);

    let gamma = gamma_arg.build(degree, limits)?;
    let b = b_arg.build(degree, limits)?;
    let delta = delta_arg.build(degree, limits)?;
    require_inside(&b, "B", &gamma, "Γ")?;
    require_inside(&delta, "Δ", &b, "B")?;
    let q_lambda = match &lambda_arg {
        Some(arg) => {
            let lambda = arg.build(degree, limits)?;
            require_inside(&lambda, "Λ", &gamma, "Γ")?;
            require_normalizing(&lambda, &delta)?;
            Some(lambda)
        }
        None => None,
    };

    let chain = SubgroupChain::new(gamma, b, delta)?;
    let opts = AnalysisOptions {
        limits: *limits,
        allow_center: true,
        q_lambda,
    };
    let report = analyze_chain_with(&chain, &opts)?;
    let names = ChainNames {
        gamma: Some(&gamma_arg.source),
        b: Some(&b_arg.source),
        delta: Some(&delta_arg.source),
        lambda: lambda_arg.as_ref().map(|s| s.source.as_str()),
    };
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION,
        command: echo,
        payload: Payload::Analysis(AnalysisDoc::new(&report, names)),
    })
}

pub fn sweep_document(
    args: &SweepArgs,
    catalog: &Catalog,
    limits: &Limits,
    echo: Vec<String>,
) -> Result<ReportDocument, CliError> {
    let arg = GroupArg::parse(&args.group, catalog, limits)?;
    let g = arg.build(arg.degree(), limits)?;
    let result = sweep(&arg.source, &g, limits)?;
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION,
        command: echo,
        payload: Payload::Sweep(SweepDoc::new(&result, args.only_incompatible, args.only_unsaturated)),
    })
}
