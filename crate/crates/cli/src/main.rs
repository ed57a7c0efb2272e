use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::{Outcome, Selector};
use flatbraid::BraidMode;

/// Flat virtual braid representations, relation checks and invariants.
#[derive(Parser, Debug)]
#[command(name = "flatbraid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the braid word after free reduction in the chosen mode.
    Parse {
        #[command(flatten)]
        input: BraidInput,
        #[arg(long, default_value = "fvb", value_parser = parse_mode)]
        mode: BraidMode,
        #[command(flatten)]
        out: Output,
    },
    /// Print the image of the braid under an automorphism representation.
    Act {
        #[command(flatten)]
        input: BraidInput,
        #[arg(long, value_parser = parse_selector)]
        rep: Selector,
        #[command(flatten)]
        out: Output,
    },
    /// Check every relation family on the letter images; exit 0 iff all
    /// defining relations hold.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_selector)]
        rep: Selector,
        #[arg(long, default_value = "fvb", value_parser = parse_mode)]
        mode: BraidMode,
        #[command(flatten)]
        out: Output,
    },
    /// Exit 0 iff the braid acts as the identity.
    KernelCheck {
        #[command(flatten)]
        input: BraidInput,
        #[arg(long, value_parser = parse_selector)]
        rep: Selector,
        #[command(flatten)]
        out: Output,
    },
    /// Rewrite a pure braid in the lambda generators, a Rabenda braid in the x
    /// generators, or a pure 3-strand braid over a, b, c.
    Rewrite {
        #[command(flatten)]
        input: BraidInput,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long, default_value = "fvb", value_parser = parse_mode)]
        mode: BraidMode,
        #[command(flatten)]
        out: Output,
    },
    /// Print the matrix of the braid under Theta, Delta or ThetaDelta.
    Matrix {
        #[command(flatten)]
        input: BraidInput,
        #[arg(long, value_parser = parse_selector)]
        rep: Selector,
        #[command(flatten)]
        out: Output,
    },
    /// Print the simplified group of the closure and its abelian invariants.
    Invariant {
        #[command(flatten)]
        input: BraidInput,
        #[arg(long, default_value = "fwb", value_parser = parse_mode)]
        mode: BraidMode,
        #[command(flatten)]
        out: Output,
    },
    /// Check the three virtual switch equations.
    SwitchCheck {
        #[command(flatten)]
        out: Output,
    },
    /// Print the permutation pair and z-residuals of a Gauss virtual braid.
    GaussImage {
        #[command(flatten)]
        input: BraidInput,
        #[command(flatten)]
        out: Output,
    },
    /// List the normal generators of the intersection of the pure and Rabenda
    /// subgroups.
    NormalGens {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "fvb", value_parser = parse_mode)]
        mode: BraidMode,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct BraidInput {
    /// Number of strands.
    #[arg(long)]
    n: usize,
    /// Braid word such as "r1 s2 (r1 s2)^5".
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    braid: Option<String>,
    /// File with one braid word per line; blank lines and lines starting
    /// with '#' are skipped.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Lambda,
    X,
    Abc,
}

fn parse_mode(s: &str) -> Result<BraidMode, String> {
    s.parse().map_err(|e: flatbraid::Error| e.to_string())
}

fn parse_selector(s: &str) -> Result<Selector, String> {
    s.parse().map_err(|e: flatbraid::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            let code = outcome.print();
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    use commands::*;
    let (outcome, format) = match command {
        Command::Parse { input, mode, out } => {
            (batch(&input, |b| parse_item(b, mode))?, out.format)
        }
        Command::Act { input, rep, out } => (batch(&input, |b| act_item(b, &rep))?, out.format),
        Command::Verify { n, rep, mode, out } => (verify(n, &rep, mode)?, out.format),
        Command::KernelCheck { input, rep, out } => {
            (batch(&input, |b| kernel_item(b, &rep))?, out.format)
        }
        Command::Rewrite {
            input,
            to,
            mode,
            out,
        } => (batch(&input, |b| rewrite_item(b, to, mode))?, out.format),
        Command::Matrix { input, rep, out } => {
            (batch(&input, |b| matrix_item(b, &rep))?, out.format)
        }
        Command::Invariant { input, mode, out } => {
            if !matches!(mode, BraidMode::Fvb | BraidMode::Fwb) {
                anyhow::bail!("the closure invariant is defined for modes fvb and fwb, not {mode}");
            }
            (batch(&input, invariant_item)?, out.format)
        }
        Command::SwitchCheck { out } => (switch_check(), out.format),
        Command::GaussImage { input, out } => (batch(&input, gauss_item)?, out.format),
        Command::NormalGens { n, mode, out } => (normal_gens(n, mode)?, out.format),
    };
    Ok(outcome.with_json(format == Format::Json))
}
