//! `lozenge`: exact tiling counts, q-enumerations, shuffling ratios,
//! randomized self-verification, and drawings, driven by JSON region
//! descriptors.
//!
//! Every command reads one descriptor from a file (or stdin with `-`) and
//! prints a JSON report that echoes the descriptor back, so reports are
//! replayable inputs. Exit codes: 0 success; 1 a cross-check or
//! verification sweep found a mismatch; 2 malformed descriptor; 3 invalid
//! region; 4 invalid shuffle; 5 usage or I/O error.

mod render;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use lozenge::descriptors::{
    parse_region, parse_shuffle, DescriptorError, Region, RegionDescriptor, ShuffleBuildError,
    ShuffleDescriptor,
};
use lozenge::formulas::{
    clp_count, hex_count, hex_count_q, sym_count, trapezoid_gf_q, FormulaError,
};
use lozenge::oracle::{self, OracleError};
use lozenge::regions::RegionError;
use lozenge::shuffle::ShuffleError;
use lozenge::verify::{run_verification, FaultInjection, VerifyConfig};
use lozenge::{QLaurentRatio, ShuffleInstance};

/// Regions at most this many unit triangles are cross-checked against
/// direct enumeration by default.
const ORACLE_CELL_BUDGET: usize = 60;
/// Rotation-fixed tilings are found by full enumeration up to this size;
/// beyond it, by counting tilings of the upper half.
const SYMMETRY_ENUMERATION_BUDGET: usize = 40;

#[derive(Parser)]
#[command(
    name = "lozenge",
    version,
    about = "Exact lozenge-tiling counts, q-enumerations, and shuffling ratios \
             for dented hexagons and trapezoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the tilings of a region.
    Count {
        /// Region descriptor file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// How to compute; defaults to cross-checking both on small regions.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Compute the generating function of tilings in q.
    CountQ {
        /// Region descriptor file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// How to compute; defaults to cross-checking both on small regions.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Count the centrally symmetric tilings of a symmetric hexagon.
    SymCount {
        /// Region descriptor file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// How to compute; defaults to cross-checking both on small regions.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Evaluate the tiling-count ratio of a dent reassignment.
    Ratio {
        /// Shuffle descriptor file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// plain: ratio of tiling counts; weighted: ratio of q-generating
        /// functions; symmetric: ratio of centrally symmetric counts.
        #[arg(long, value_enum, default_value_t = Mode::Plain)]
        mode: Mode,
    },
    /// Run randomized self-checks of every formula against enumeration.
    Verify {
        /// Bound on region size (side sums) for generated cases.
        #[arg(long, default_value_t = 4)]
        max_size: u32,
        /// RNG seed; identical seeds replay identical cases.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Randomized cases per suite.
        #[arg(long, default_value_t = 100)]
        cases: u64,
        /// Plant a known defect to demonstrate a failing run.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Draw a region, or one of its tilings, as text or SVG.
    Render {
        /// Region descriptor file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Index of the tiling to draw, in enumeration order; omit to draw
        /// the bare region with its dents marked.
        #[arg(long)]
        tiling: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }

    /// Default: cross-check both paths when enumeration is affordable.
    fn pick(explicit: Option<Method>, num_cells: usize) -> Method {
        explicit.unwrap_or(if num_cells <= ORACLE_CELL_BUDGET {
            Method::Both
        } else {
            Method::Formula
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Plain,
    Weighted,
    Symmetric,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<DescriptorError> for Failure {
    fn from(e: DescriptorError) -> Self {
        Failure::new(2, e.to_string())
    }
}

impl From<RegionError> for Failure {
    fn from(e: RegionError) -> Self {
        Failure::new(3, e.to_string())
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        Failure::new(3, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::new(3, e.to_string())
    }
}

impl From<ShuffleError> for Failure {
    fn from(e: ShuffleError) -> Self {
        Failure::new(4, e.to_string())
    }
}

impl From<ShuffleBuildError> for Failure {
    fn from(e: ShuffleBuildError) -> Self {
        match e {
            ShuffleBuildError::Region(e) => e.into(),
            ShuffleBuildError::Shuffle(e) => e.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 5,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Count { input, method } => cmd_count(&input, method),
        Command::CountQ { input, method } => cmd_count_q(&input, method),
        Command::SymCount { input, method } => cmd_sym_count(&input, method),
        Command::Ratio { input, mode } => cmd_ratio(&input, mode),
        Command::Verify {
            max_size,
            seed,
            cases,
            inject_fault,
        } => cmd_verify(max_size, seed, cases, inject_fault),
        Command::Render {
            input,
            format,
            tiling,
        } => cmd_render(&input, format, tiling),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    text.map_err(|e| {
        let source = if path == "-" { "stdin" } else { path };
        Failure::new(5, format!("cannot read {source}: {e}"))
    })
}

fn load_region(path: &str) -> Result<(RegionDescriptor, Region), Failure> {
    let descriptor = parse_region(&read_input(path)?)?;
    let region = descriptor.build()?;
    Ok((descriptor, region))
}

fn emit<T: Serialize>(report: &T) {
    let json = serde_json::to_string_pretty(report).expect("reports serialize");
    println!("{json}");
}

fn exit_for(agree: Option<bool>) -> u8 {
    u8::from(agree == Some(false))
}

#[derive(Serialize)]
struct CountReport {
    region: RegionDescriptor,
    method: &'static str,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn cmd_count(path: &str, method: Option<Method>) -> Result<u8, Failure> {
    let (region_desc, region) = load_region(path)?;
    let grid = region.build_cells();
    let formula = || match &region {
        Region::Hexagon(h) => hex_count(h),
        Region::Trapezoid(t) => clp_count(t),
    };
    let method = Method::pick(method, grid.num_cells());
    let (count, agree) = match method {
        Method::Formula => (formula(), None),
        Method::Oracle => (oracle::count_tilings(&grid), None),
        Method::Both => {
            let expected = formula();
            let counted = oracle::count_tilings(&grid);
            let agree = expected == counted;
            (expected, Some(agree))
        }
    };
    let report = CountReport {
        region: region_desc,
        method: method.name(),
        count: count.to_string(),
        agree,
    };
    emit(&report);
    Ok(exit_for(agree))
}

#[derive(Serialize)]
struct CountQReport {
    region: RegionDescriptor,
    method: &'static str,
    /// Coefficients of the generating function, constant term first.
    coeffs: Vec<String>,
    /// Value at q = 1, i.e. the plain tiling count.
    at_one: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn cmd_count_q(path: &str, method: Option<Method>) -> Result<u8, Failure> {
    let (region_desc, region) = load_region(path)?;
    let grid = region.build_cells();
    let formula = || match &region {
        Region::Hexagon(h) => hex_count_q(h),
        Region::Trapezoid(t) => trapezoid_gf_q(t),
    };
    let method = Method::pick(method, grid.num_cells());
    let (gf, agree) = match method {
        Method::Formula => (formula(), None),
        Method::Oracle => (oracle::generating_function_q(&grid), None),
        Method::Both => {
            let expected = formula();
            let counted = oracle::generating_function_q(&grid);
            let agree = expected == counted;
            (expected, Some(agree))
        }
    };
    let report = CountQReport {
        region: region_desc,
        method: method.name(),
        coeffs: gf.coeff_strings(),
        at_one: gf.evaluate_at_one().to_string(),
        agree,
    };
    emit(&report);
    Ok(exit_for(agree))
}

fn symmetric_oracle_count(region: &Region) -> Result<BigInt, Failure> {
    let grid = region.build_cells();
    let count = if grid.num_cells() <= SYMMETRY_ENUMERATION_BUDGET {
        oracle::count_symmetric_tilings(&grid)?
    } else {
        match region {
            Region::Hexagon(h) => oracle::count_symmetric_via_upper_half(h)?,
            Region::Trapezoid(_) => {
                return Err(Failure::new(
                    3,
                    "centrally symmetric counting requires a hexagon region",
                ))
            }
        }
    };
    Ok(count)
}

fn cmd_sym_count(path: &str, method: Option<Method>) -> Result<u8, Failure> {
    let (region_desc, region) = load_region(path)?;
    let hexagon = match &region {
        Region::Hexagon(h) => h,
        Region::Trapezoid(_) => {
            return Err(Failure::new(
                3,
                "centrally symmetric counting requires a hexagon region",
            ))
        }
    };
    let method = Method::pick(method, region.build_cells().num_cells());
    let (count, agree) = match method {
        Method::Formula => (sym_count(hexagon)?, None),
        Method::Oracle => (symmetric_oracle_count(&region)?, None),
        Method::Both => {
            let expected = sym_count(hexagon)?;
            let counted = symmetric_oracle_count(&region)?;
            let agree = expected == counted;
            (expected, Some(agree))
        }
    };
    let report = CountReport {
        region: region_desc,
        method: method.name(),
        count: count.to_string(),
        agree,
    };
    emit(&report);
    Ok(exit_for(agree))
}

#[derive(Serialize)]
struct RatioValue {
    numerator: String,
    denominator: String,
}

#[derive(Serialize)]
struct RatioReport {
    shuffle: ShuffleDescriptor,
    /// The reassigned region the ratio compares against the source.
    target: RegionDescriptor,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio: Option<RatioValue>,
    /// Net power of q carried by the weighted ratio.
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    num_coeffs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    den_coeffs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    source_count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    target_count: Option<String>,
    /// Whether the independently computed counts confirm the ratio.
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

impl RatioReport {
    fn new(shuffle: ShuffleDescriptor, instance: &ShuffleInstance, mode: &'static str) -> Self {
        RatioReport {
            shuffle,
            target: RegionDescriptor::from_region(&Region::Hexagon(instance.target().clone())),
            mode,
            ratio: None,
            alpha: None,
            num_coeffs: None,
            den_coeffs: None,
            source_count: None,
            target_count: None,
            verified: false,
            note: None,
        }
    }
}

fn cmd_ratio(path: &str, mode: Mode) -> Result<u8, Failure> {
    let shuffle_desc = parse_shuffle(&read_input(path)?)?;
    let instance = shuffle_desc.build()?;
    let mut report = match mode {
        Mode::Plain => {
            let ratio = instance.ratio_unweighted();
            let source_count = hex_count(instance.source());
            let target_count = hex_count(instance.target());
            let mut report = RatioReport::new(shuffle_desc, &instance, "plain");
            report.verified = &target_count * ratio.denom() == &source_count * ratio.numer();
            report.ratio = Some(RatioValue {
                numerator: ratio.numer().to_string(),
                denominator: ratio.denom().to_string(),
            });
            report.source_count = Some(source_count.to_string());
            report.target_count = Some(target_count.to_string());
            report
        }
        Mode::Weighted => {
            let ratio = instance.ratio_weighted();
            let gf_source = hex_count_q(instance.source());
            let gf_target = hex_count_q(instance.target());
            // A valid region always has a tiling, so the denominator is
            // nonzero.
            let expected = QLaurentRatio::new(0, gf_target, gf_source)
                .expect("tileable source has a nonzero generating function");
            let mut report = RatioReport::new(shuffle_desc, &instance, "weighted");
            report.verified = ratio == expected;
            report.alpha = Some(ratio.shift());
            report.num_coeffs = Some(ratio.numerator().coeff_strings());
            report.den_coeffs = Some(ratio.denominator().coeff_strings());
            report
        }
        Mode::Symmetric => {
            let ratio = instance.ratio_symmetric()?;
            let source_count = sym_count(instance.source()).expect("source is symmetric");
            let target_count = sym_count(instance.target()).expect("target is symmetric");
            let mut report = RatioReport::new(shuffle_desc, &instance, "symmetric");
            report.verified = &target_count * ratio.denom() == &source_count * ratio.numer();
            if source_count.is_zero() && target_count.is_zero() {
                report.note = Some(
                    "both symmetric tiling counts are zero; the ratio is their \
                     formula value, not a quotient of counts"
                        .into(),
                );
            }
            report.ratio = Some(RatioValue {
                numerator: ratio.numer().to_string(),
                denominator: ratio.denom().to_string(),
            });
            report.source_count = Some(source_count.to_string());
            report.target_count = Some(target_count.to_string());
            report
        }
    };
    // Reports echo their input; keep that before any early exit below.
    let verified = report.verified;
    if !verified && report.note.is_none() {
        report.note = Some("independent counts contradict the ratio".into());
    }
    emit(&report);
    Ok(u8::from(!verified))
}

fn cmd_verify(max_size: u32, seed: u64, cases: u64, inject_fault: bool) -> Result<u8, Failure> {
    let config = VerifyConfig {
        max_size,
        seed,
        cases,
        fault: if inject_fault {
            FaultInjection::AlphaSignFlip
        } else {
            FaultInjection::None
        },
    };
    let report = run_verification(&config);
    emit(&report);
    Ok(u8::from(!report.all_passed))
}

fn cmd_render(path: &str, format: Format, tiling: Option<u64>) -> Result<u8, Failure> {
    let (_, region) = load_region(path)?;
    let grid = region.build_cells();
    let picture = match tiling {
        None => match format {
            Format::Ascii => render::ascii_region(&grid),
            Format::Svg => render::svg_region(&grid),
        },
        Some(index) => {
            let tiling = oracle::nth_tiling(&grid, index)
                .ok_or_else(|| Failure::new(5, format!("tiling index {index} is out of range")))?;
            match format {
                Format::Ascii => render::ascii_tiling(&grid, &tiling),
                Format::Svg => render::svg_tiling(&grid, &tiling),
            }
        }
    };
    print!("{picture}");
    Ok(0)
}
