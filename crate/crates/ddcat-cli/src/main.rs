use clap::{Parser, Subcommand};

use ddcat_cli::{CliError, Format};

#[derive(Parser)]
#[command(
    name = "ddcat",
    about = "Hom hammocks, autoequivalences and silting in derived-discrete categories",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hom dimension between two indecomposables, optionally graded.
    Hom {
        /// Algebra parameters r,n,m
        #[arg(long)]
        params: String,
        /// Source object KIND:comp:i:j
        #[arg(long)]
        from: String,
        /// Target object KIND:comp:i:j
        #[arg(long)]
        to: String,
        /// Print the whole graded profile
        #[arg(long)]
        graded: bool,
        /// Single degree to evaluate
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<i64>,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Silting families and boxed instances over a base Z object.
    Silting {
        #[arg(long)]
        params: String,
        /// Base object Z:comp:i:j
        #[arg(long)]
        z: String,
        /// Shift box lo..hi
        #[arg(long = "box", default_value = "-1..1", allow_hyphen_values = true)]
        box_spec: String,
        /// Re-verify each instance against the Hom engine
        #[arg(long)]
        check: bool,
    },
    /// Reproduce the worked-example table and compare to the golden file.
    Table231,
    /// All tilting objects through a base Z object inside a window.
    Tilting {
        #[arg(long)]
        params: String,
        #[arg(long)]
        z: String,
        #[arg(long, default_value_t = 4)]
        window: i64,
    },
    /// Cross-validate the Hom engine against the string-module oracle.
    OracleCheck {
        #[arg(long)]
        params: String,
        /// Level bound of the repetitive-algebra window
        #[arg(long, default_value_t = 4)]
        window: i64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Deliberately corrupt one comparison (must then exit nonzero)
        #[arg(long)]
        perturb: bool,
    },
    /// Export the AR-quiver window as DOT or text.
    ExportAr {
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 3)]
        window: i64,
        #[arg(long, default_value = "dot")]
        format: Format,
        /// Shade the Hom-hammock of this source object
        #[arg(long)]
        shade_from: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Hom { params, from, to, graded, degree, format } => {
            ddcat_cli::cmd_hom(params, from, to, *graded, *degree, *format)
        }
        Command::Silting { params, z, box_spec, check } => {
            ddcat_cli::cmd_silting(params, z, box_spec, *check)
        }
        Command::Table231 => ddcat_cli::cmd_table231(),
        Command::Tilting { params, z, window } => ddcat_cli::cmd_tilting(params, z, *window),
        Command::OracleCheck { params, window, samples, seed, perturb } => {
            ddcat_cli::cmd_oracle_check(params, *window, *samples, *seed, *perturb)
        }
        Command::ExportAr { params, window, format, shade_from } => {
            ddcat_cli::cmd_export_ar(params, *window, *format, shade_from.as_deref())
        }
    };
    match result {
        Ok(out) => {
            print!("{out}");
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Check(msg)) => {
            eprintln!("check failed: {msg}");
            std::process::exit(1);
        }
    }
}
