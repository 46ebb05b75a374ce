//! Command-line entry point for the rational-map classifier.

use clap::{Args, Parser, Subcommand};
use orbiclass::cli::{
    self, cmd_catalog, cmd_classify, cmd_compose, cmd_mu_equiv, cmd_passport,
    cmd_verify_identities, map_from_args, EXIT_USAGE,
};
use orbiclass::ratmap::RationalMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "orbiclass",
    version,
    about = "Exact classification of rational maps by the genus of their Galois closure"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Reduce text output to the essentials
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct MapArgs {
    /// Rational-function expression in z, e.g. "(z^2+1)^2 / (4*z*(z^2-1))"
    expr: Option<String>,
    /// Numerator coefficients, lowest degree first (alternative to an expression)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    num: Option<Vec<i64>>,
    /// Denominator coefficients, lowest degree first (defaults to 1)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    den: Option<Vec<i64>>,
}

impl MapArgs {
    fn resolve(&self) -> Result<RationalMap, cli::CliError> {
        map_from_args(self.expr.as_deref(), self.num.as_deref(), self.den.as_deref())
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Full classification report for one map
    Classify(MapArgs),
    /// List catalog entries (all fixed entries, or one family)
    Catalog {
        /// Family filter: cyclic, chebyshev, dihedral, tetra, octa, icosa
        #[arg(long)]
        family: Option<String>,
        /// Parameter for the parametric families, 1..=1000
        #[arg(long)]
        n: Option<u32>,
    },
    /// Run the built-in exact identity suite
    VerifyIdentities,
    /// Branch data of one map: partitions of the degree over critical values
    Passport(MapArgs),
    /// Decide Mobius equivalence of two maps
    MuEquiv {
        /// First expression
        a: String,
        /// Second expression
        b: String,
    },
    /// Compose expressions left to right (outermost first) and print the result
    Compose {
        /// Expressions to compose
        #[arg(required = true)]
        exprs: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = run(&cli);
    if code == 0 {
        print!("{}", out);
    } else {
        eprint!("{}", out);
    }
    ExitCode::from(code as u8)
}

fn run(cli: &Cli) -> (String, i32) {
    match &cli.cmd {
        Cmd::Classify(args) => match args.resolve() {
            Ok(m) => cmd_classify(&m, cli.json, cli.quiet),
            Err(e) => (format!("error: {}\n", e), EXIT_USAGE),
        },
        Cmd::Catalog { family, n } => cmd_catalog(family.as_deref(), *n, cli.json),
        Cmd::VerifyIdentities => cmd_verify_identities(cli.json, cli.quiet),
        Cmd::Passport(args) => match args.resolve() {
            Ok(m) => cmd_passport(&m, cli.json),
            Err(e) => (format!("error: {}\n", e), EXIT_USAGE),
        },
        Cmd::MuEquiv { a, b } => {
            match (cli::parse_map(a), cli::parse_map(b)) {
                (Ok(ma), Ok(mb)) => cmd_mu_equiv(&ma, &mb, cli.json),
                (Err(e), _) | (_, Err(e)) => (format!("error: {}\n", e), EXIT_USAGE),
            }
        }
        Cmd::Compose { exprs } => {
            let mut maps = Vec::new();
            for e in exprs {
                match cli::parse_map(e) {
                    Ok(m) => maps.push(m),
                    Err(err) => return (format!("error: {}\n", err), EXIT_USAGE),
                }
            }
            cmd_compose(&maps, cli.json)
        }
    }
}
