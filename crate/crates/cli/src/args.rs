use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "unilat", version, about = "Exact computations with even unimodular lattices")]
pub struct Cli {
    /// Node budget for every lattice enumeration.
    #[arg(long, global = true, default_value_t = 1_000_000_000)]
    pub budget: u64,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, env = "UNILAT_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lattice invariants and transformations.
    #[command(subcommand)]
    Lat(LatCmd),
    /// Linear codes over prime fields.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Lattices built from codes and neighbors.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Automorphisms of prime order and their types.
    #[command(subcommand)]
    Aut(AutCmd),
    /// Types p-(z,d)-s allowed by the parity law and the Hermite bounds.
    Scan(ScanArgs),
    /// Ideal lattices over cyclotomic fields.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Hermite constant bounds.
    #[command(subcommand)]
    Bound(BoundCmd),
}

#[derive(Subcommand, Debug)]
pub enum LatCmd {
    /// Determinant, parity, p-elementarity and optionally the minimum.
    Info {
        file: PathBuf,
        #[arg(long)]
        min: bool,
        /// Also count minimal vectors (implies --min).
        #[arg(long)]
        kissing: bool,
    },
    /// The dual lattice.
    Dual { file: PathBuf },
    /// LLL-reduced Gram matrix and the basis transform.
    Lll { file: PathBuf },
    /// Invariant factors of the discriminant group.
    Disc { file: PathBuf },
    /// Isometry test.
    Isom {
        first: PathBuf,
        second: PathBuf,
        /// Largest dimension attempted.
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CodeCmd {
    /// Dimension, self-orthogonality, self-duality and minimum weight.
    Info { file: PathBuf },
    /// The dual code.
    Dual { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum ConstructCmd {
    /// Construction A: the lattice (1/√p)·{x : x mod p ∈ C}.
    A { code: PathBuf },
    /// The 2-neighbor of an integral lattice at `v`.
    Neighbor {
        lattice: PathBuf,
        /// Basis coordinates of v, whitespace or comma separated.
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// The even unimodular lattice Λ(C) of a self-dual ternary code.
    Koch { code: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum AutCmd {
    /// Type p-(z,d)-s of an automorphism of prime order p.
    Type {
        lattice: PathBuf,
        #[arg(long)]
        sigma: PathBuf,
        #[arg(long)]
        p: u64,
        /// Check the index, discriminant and parity laws.
        #[arg(long)]
        verify: bool,
    },
    /// Characteristic polynomial as a product of cyclotomic polynomials.
    Cyclo {
        matrix: PathBuf,
        /// Largest order tried.
        #[arg(long, default_value_t = 10_000)]
        cap: u64,
    },
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(long)]
    pub dim: usize,
    /// Minimum of the ambient lattice (integer or a/b).
    #[arg(long)]
    pub min: String,
    /// Restrict to one prime.
    #[arg(long)]
    pub p: Option<u64>,
    /// Also list excluded types with the reason.
    #[arg(long)]
    pub all: bool,
}

#[derive(Args, Debug)]
pub struct IdealArgs {
    #[arg(long)]
    pub m: u64,
    /// Ideal file; the ring of integers when omitted.
    #[arg(long)]
    pub ideal: Option<PathBuf>,
    /// Power-basis coefficients of α.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
}

#[derive(Subcommand, Debug)]
pub enum IdealCmd {
    /// The lattice (J, Tr(α x ȳ)).
    Lattice(IdealArgs),
    /// The ideal conj(J)^-1 Δ α^-1 of the dual lattice.
    Dual(IdealArgs),
    /// Whether (J, Tr(α x ȳ)) is unimodular.
    Unimodular(IdealArgs),
    /// Whether α is totally positive, with certified embeddings.
    TpTest {
        #[arg(long)]
        m: u64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum BoundCmd {
    /// Upper bound on γ_n^n.
    Gamma {
        #[arg(long)]
        n: usize,
    },
    /// Minimum 2 + 2⌊n/24⌋ of an extremal even unimodular lattice.
    Extremal {
        #[arg(long)]
        n: u64,
    },
    /// Whether the Hermite bound allows a lattice with these invariants.
    Exists {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        min: String,
        #[arg(long)]
        det: String,
    },
}
