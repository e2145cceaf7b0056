use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qdouble::perm::Parity;

#[derive(Debug, Parser)]
#[command(name = "qdouble", version, about = "Exact checks for doubled group Hopf algebras and their towers")]
pub struct Cli {
    /// Write the JSON report here instead of printing text.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Soft dimension guard for axiom checks (capped at 1440).
    #[arg(long, global = true)]
    pub max_dim: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Hopf axioms of a group algebra or its doubling.
    Axioms(AxiomsArgs),
    /// Build a doubling and run every structural check on it.
    Double(GroupTheta),
    /// p-adic tower of cyclic groups.
    Padic(PadicArgs),
    /// Comultiplication and coaction formulas for doubled cyclic groups.
    Finsym(FinsymArgs),
    /// Odd or even tower of symmetric groups.
    Symtower(SymtowerArgs),
    /// Binomial group-like scan in doubled symmetric groups.
    Nonexistence(NArgs),
    /// Finitary permutation partitions and their restriction checks.
    Partitions(PartitionsArgs),
    /// Dimension of the algebra generated by coaction slices.
    Faithful(GroupTheta),
    /// Fixed-point obstruction between the two reflections.
    Obstruction(NArgs),
    /// Run every entry of a JSON manifest.
    Manifest(ManifestArgs),
}

/// `Z<l>` or `S<n>` (ground set `1..n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Symmetric(usize),
}

impl FromStr for GroupSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (head, tail) = s.split_at(s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len()));
        let n: u64 = tail
            .parse()
            .map_err(|_| format!("expected Z<l> or S<n>, got `{s}`"))?;
        match head {
            "Z" | "C" | "z" | "c" => Ok(GroupSpec::Cyclic(n)),
            "S" | "s" => Ok(GroupSpec::Symmetric(n as usize)),
            _ => Err(format!("expected Z<l> or S<n>, got `{s}`")),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(l) => write!(f, "Z{l}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ThetaArg {
    Flip,
    Inverse,
    Id,
}

impl fmt::Display for ThetaArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThetaArg::Flip => "flip",
            ThetaArg::Inverse => "inverse",
            ThetaArg::Id => "id",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Odd,
    Even,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Odd => Parity::Odd,
            ParityArg::Even => Parity::Even,
        }
    }
}

impl fmt::Display for ParityArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityArg::Odd => "odd",
            ParityArg::Even => "even",
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct AxiomsArgs {
    #[arg(long)]
    pub group: GroupSpec,
    /// Check the doubling by this automorphism instead of the group algebra.
    #[arg(long, value_enum)]
    pub double: Option<ThetaArg>,
}

#[derive(Debug, Clone, Args)]
pub struct GroupTheta {
    #[arg(long)]
    pub group: GroupSpec,
    #[arg(long, value_enum)]
    pub theta: ThetaArg,
}

#[derive(Debug, Clone, Args)]
pub struct PadicArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 3)]
    pub stages: u32,
}

#[derive(Debug, Clone, Args)]
pub struct FinsymArgs {
    #[arg(long)]
    pub l: u64,
}

#[derive(Debug, Clone, Args)]
pub struct SymtowerArgs {
    #[arg(long, value_enum)]
    pub parity: ParityArg,
    #[arg(long)]
    pub max_n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct NArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct PartitionsArgs {
    #[arg(long, value_enum)]
    pub parity: ParityArg,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ManifestArgs {
    pub path: PathBuf,
}

/// Parser for a single suite, used for manifest entries.
#[derive(Debug, Parser)]
#[command(name = "suite", no_binary_name = true)]
pub struct SuiteCli {
    #[command(subcommand)]
    pub command: Command,
}

impl Command {
    pub fn suite(&self) -> &'static str {
        match self {
            Command::Axioms(_) => "axioms",
            Command::Double(_) => "double",
            Command::Padic(_) => "padic",
            Command::Finsym(_) => "finsym",
            Command::Symtower(_) => "symtower",
            Command::Nonexistence(_) => "nonexistence",
            Command::Partitions(_) => "partitions",
            Command::Faithful(_) => "faithful",
            Command::Obstruction(_) => "obstruction",
            Command::Manifest(_) => "manifest",
        }
    }

    /// Canonical parameters, used in report entries.
    pub fn params(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            m.insert(k.to_string(), v);
        };
        match self {
            Command::Axioms(a) => {
                put("group", a.group.to_string());
                if let Some(t) = a.double {
                    put("double", t.to_string());
                }
            }
            Command::Double(a) | Command::Faithful(a) => {
                put("group", a.group.to_string());
                put("theta", a.theta.to_string());
            }
            Command::Padic(a) => {
                put("p", a.p.to_string());
                put("stages", a.stages.to_string());
            }
            Command::Finsym(a) => put("l", a.l.to_string()),
            Command::Symtower(a) => {
                put("parity", a.parity.to_string());
                put("max_n", a.max_n.to_string());
            }
            Command::Nonexistence(a) | Command::Obstruction(a) => put("n", a.n.to_string()),
            Command::Partitions(a) => {
                put("parity", a.parity.to_string());
                put("n", a.n.to_string());
            }
            Command::Manifest(a) => put("path", a.path.display().to_string()),
        }
        m
    }
}
