//! `vxa`: command line front end. See `vxa --help`.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use vxa_core::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

const VALUE_HELP: &str = "Value syntax:
  EXPR   vector expression in the generators, e.g. 'D*a + 2*k'
  POINT  generator coordinates, e.g. 'a[0]=3/2, k[0]=-1' (or '0')
  PBW    normally ordered monomials, e.g. '2*:a a[1]: - 1/2*:k: + 1'
Any value may be '@FILE' naming a JSON document:
  points and vectors {\"coords\": {\"a[0]\": \"3/2\"}},
  PBW elements {\"terms\": [{\"coeff\": \"2\", \"letters\": [\"a[0]\", \"a[1]\"]}]}.
Exit codes: 0 ok, 1 a check failed, 2 parse or usage error, 3 not nilpotent,
4 table truncation insufficient.";

#[derive(Parser, Debug)]
#[command(name = "vxa", version, about = "Lie conformal algebras, enveloping vertex algebras and vertex manifolds", after_help = VALUE_HELP)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check antisymmetry and the Jacobi identity of a presentation.
    Check { file: String },
    /// λ-bracket of two vectors.
    Bracket {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// n-th product of two vectors, n >= 0.
    Nth {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Normally ordered product in the enveloping vertex algebra.
    Nop {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// u_(n) v for n in a window, with the truncation bound.
    Yprod {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, allow_hyphen_values = true, value_parser = input::window)]
        window: (i64, i64),
    },
    /// Coproduct of a PBW element.
    Coproduct {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
    },
    /// Basis of the primitive elements among monomials of bounded length and depth.
    Primitives {
        file: String,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        depth: u32,
    },
    /// Extract the formal vertex law tables and optionally check them.
    Fvl {
        file: String,
        #[arg(long)]
        deg: u32,
        #[arg(long)]
        depth: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = input::window)]
        window: (i64, i64),
        /// Check the left and right identity laws.
        #[arg(long)]
        check_identities: bool,
        /// Check the Jacobi identity up to this total degree, at (l,t,j) in
        /// {(0,0,0), (-1,0,0), (0,-1,1), (1,-1,-1)}.
        #[arg(long, value_name = "DEG")]
        check_jacobi: Option<u32>,
        /// Write the table JSON here instead of printing it.
        #[arg(long)]
        out: Option<String>,
    },
    /// Integrate a nilpotent presentation and print the adapted basis.
    Integrate {
        file: String,
        /// Largest letter depth listed.
        #[arg(long, default_value_t = 2)]
        depth: u32,
    },
    /// Vertex manifold products a •_n b for n in a window.
    Eval {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true, value_parser = input::window)]
        window: (i64, i64),
        /// Also print floating point approximations.
        #[arg(long)]
        float: bool,
    },
    /// Check the vertex manifold axioms at random rational points.
    VerifyManifold {
        file: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = input::window, default_value = "-4..4")]
        window: (i64, i64),
    },
    /// Integrate, recover the tangent algebra and compare with the input.
    Roundtrip { file: String },
    /// Print a presentation file in canonical form.
    Fmt { file: String },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::AxiomFailure(_) => 1,
        Error::NotNilpotent { .. } => 3,
        Error::TruncationInsufficient(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.format == Format::Json {
                println!("{}", serde_json::json!({ "error": e.to_string(), "exit": code }));
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
