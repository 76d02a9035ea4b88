//! Argument surface of the workbench.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "cjlab",
    about = "Analysis workbench for in-browser mining: script metrics, clustering, protocol simulation, economics, corpus scans",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute the 17-feature complexity vector for JavaScript files.
    Features(FeaturesArgs),
    /// Per-class Pearson correlation matrices from a feature CSV.
    Correlate(CorrelateArgs),
    /// Select the features most distinctive of mining scripts.
    SelectFeatures(SelectArgs),
    /// Fuzzy c-means clustering of a feature CSV.
    Cluster(ClusterArgs),
    /// Run detectors over a session frame log.
    Detect(DetectArgs),
    /// Spawn dropzone/miner(/relay) per a scenario and report verdicts.
    Simulate(SimulateArgs),
    /// Session economics, site revenue tables, battery curves, block model.
    Econ(EconArgs),
    /// Scan an HTML corpus (or the bundled synthetic set) for mining
    /// signatures and aggregate distributions.
    Scan(ScanArgs),
}

#[derive(Args)]
pub struct FeaturesArgs {
    /// JavaScript files; with none, source is read from stdin.
    pub files: Vec<String>,
    /// Label column value; defaults to the file name (or "stdin").
    #[arg(long)]
    pub label: Option<String>,
    /// Emit a JSON array instead of CSV.
    #[arg(long)]
    pub json: bool,
    /// Write output here instead of stdout.
    #[arg(short, long)]
    pub output: Option<String>,
}

#[derive(Args)]
pub struct CorrelateArgs {
    /// Feature CSV produced by `features` (17 columns + label).
    #[arg(long)]
    pub input: String,
    /// Directory for per-class correlation CSVs.
    #[arg(long)]
    pub out_dir: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct SelectArgs {
    #[arg(long)]
    pub input: String,
    /// Skip the diagonal when averaging correlation columns.
    #[arg(long)]
    pub exclude_diagonal: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum NormalizationArg {
    Zscore,
    Sphere,
}

#[derive(Args)]
pub struct ClusterArgs {
    #[arg(long)]
    pub input: String,
    /// Compare hard assignments against the CSV's label column.
    #[arg(long)]
    pub evaluate: bool,
    #[arg(long, default_value_t = 3)]
    pub clusters: usize,
    #[arg(long, default_value_t = 2.0)]
    pub fuzzifier: f64,
    #[arg(long, default_value_t = 20)]
    pub restarts: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = NormalizationArg::Sphere)]
    pub normalization: NormalizationArg,
    /// Write the 2-D principal-component projection as CSV here.
    #[arg(long)]
    pub projection: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct DetectArgs {
    /// Session log (JSONL) to fold the content detector over; defaults to
    /// stdin.
    #[arg(long)]
    pub log: Option<String>,
    /// Newline-delimited host patterns for the blacklist detector.
    #[arg(long)]
    pub blacklist: Option<String>,
    /// Endpoint the session connected to, for the blacklist detector.
    #[arg(long)]
    pub endpoint: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum TopologyArg {
    Direct,
    Relay,
}

#[derive(Args)]
pub struct SimulateArgs {
    /// Scenario topology; ignored when --scenario-file is given.
    #[arg(long, value_enum, default_value_t = TopologyArg::Direct)]
    pub scenario: TopologyArg,
    /// Full scenario description (JSON); overrides the other knobs.
    #[arg(long)]
    pub scenario_file: Option<String>,
    #[arg(long, default_value = "ffffff00")]
    pub target: String,
    #[arg(long, default_value_t = 0.5)]
    pub throttle: f64,
    #[arg(long, default_value_t = 11)]
    pub seed: u64,
    /// Stop after this many accepted shares.
    #[arg(long, default_value_t = 3)]
    pub shares: u64,
    /// Write the miner's frame log (JSONL) here.
    #[arg(long)]
    pub log: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SiteTableArg {
    Top,
    Dataset,
}

#[derive(Args)]
pub struct EconArgs {
    /// Device profile name (windows, linux, android, or one from config).
    #[arg(long)]
    pub device: Option<String>,
    /// Throttle parameter alpha in [0, 1].
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Emit a site revenue table comparison.
    #[arg(long, value_enum)]
    pub sites: Option<SiteTableArg>,
    /// Visitor hash rate for site tables.
    #[arg(long, default_value_t = 20.0)]
    pub visitor_hash_rate: f64,
    /// Write a battery trajectory CSV (time_s,battery_pct) here.
    #[arg(long)]
    pub battery_csv: Option<String>,
    /// Trajectory length in minutes; defaults to the device session.
    #[arg(long)]
    pub duration: Option<f64>,
    /// Proof-of-work target as up to 64 hex digits.
    #[arg(long)]
    pub pow_target: Option<String>,
    /// Network hash rate for the block model.
    #[arg(long, default_value_t = 1e9)]
    pub network_hash_rate: f64,
    #[arg(long)]
    pub xmr_price: Option<f64>,
    /// XMR paid per million hashes.
    #[arg(long)]
    pub payout_rate: Option<f64>,
    /// Electricity cost in USD per watt-hour.
    #[arg(long)]
    pub electricity_cost: Option<f64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct ScanArgs {
    /// Directory of .html files to scan.
    #[arg(long)]
    pub dir: Option<String>,
    /// Newline-delimited URL list; pages are not fetched, so only
    /// domain-level distributions are produced.
    #[arg(long)]
    pub urls: Option<String>,
    /// Use the bundled 5703-site synthetic corpus.
    #[arg(long)]
    pub synthetic: bool,
    /// Signature database JSON; defaults to the built-in set.
    #[arg(long)]
    pub signatures: Option<String>,
    /// Write per-site records (JSONL) here.
    #[arg(long)]
    pub records: Option<String>,
    #[arg(long)]
    pub json: bool,
}
