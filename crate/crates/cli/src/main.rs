//! `coprime-forest`: enumerate the coprime-pair trees, check their Bezout
//! coefficients against extended gcd, benchmark the two, print Pythagorean
//! triples, and render wallpaper images.
//!
//! Exit codes: 0 success (and conjecture holds for `check`), 1 conjecture
//! violated, 2 usage error, 3 runtime error (overflow, I/O).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use coprime_forest::conjecture::compare_forest;
use coprime_forest::forest::enumerate;
use coprime_forest::{BezoutPair, CoprimePair};
use coprime_forest_cli::dump::{self, TreeRecord};
use coprime_wallpaper::{
    bench_generation, render_to_file, ColormapSource, Motif, RenderConfig, Window,
};

#[derive(Parser)]
#[command(
    name = "coprime-forest",
    version,
    about = "Trees of relatively prime pairs, their Bezout coefficients, and hyperbolic wallpapers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dump tree nodes in level order
    Tree {
        /// Tree root: 2,1 or 3,1
        #[arg(long, value_parser = parse_root)]
        root: CoprimePair,
        /// Deepest level to enumerate (root is level 0)
        #[arg(long)]
        depth: u32,
        /// Also emit the level-0 root row
        #[arg(long)]
        include_root: bool,
        /// Output format
        #[arg(long, value_enum, default_value_t = DumpFormat::Csv)]
        format: DumpFormat,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare tree coefficients against the extended-gcd oracle
    Check {
        /// Comparison depth (levels 1..=N of both trees)
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
        /// Replace the (2,1) branch-A coefficients with (1,-1) first
        #[arg(long)]
        patched: bool,
        /// Write the JSON report to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time tree-carried coefficients against per-pair extended gcd
    Bench {
        /// Enumeration depth for both methods
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
    },
    /// Print the Pythagorean triple generated by a pair, as "x y z"
    Triple { m: i64, n: i64 },
    /// Render a wallpaper image as binary PPM
    Render {
        /// View rectangle x_min,x_max,y_min,y_max in the upper half-plane
        #[arg(long, value_parser = parse_window, default_value = "-1,1,0.05,2.05", allow_hyphen_values = true)]
        window: Window,
        /// Image size as WxH
        #[arg(long, value_parser = parse_size, default_value = "512x512")]
        size: (u32, u32),
        /// Forest depth contributing Mobius terms
        #[arg(long, default_value_t = 5)]
        term_depth: u32,
        /// Motif function summed over the terms
        #[arg(long, value_enum, default_value_t = MotifArg::Exp)]
        motif: MotifArg,
        /// "builtin" for the hue wheel, or a path to a PPM texture
        #[arg(long, value_parser = parse_colormap, default_value = "builtin")]
        colormap: ColormapSource,
        /// Include the base maps for (c,d) in {(0,1),(1,0),(1,1)}
        #[arg(long)]
        base_terms: bool,
        /// Include each node's swapped-pair map
        #[arg(long)]
        swapped: bool,
        /// Worker threads (0 = all available)
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Output PPM path
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DumpFormat {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MotifArg {
    Exp,
    Identity,
}

impl From<MotifArg> for Motif {
    fn from(m: MotifArg) -> Motif {
        match m {
            MotifArg::Exp => Motif::Exp,
            MotifArg::Identity => Motif::Identity,
        }
    }
}

fn parse_root(s: &str) -> Result<CoprimePair, String> {
    match s {
        "2,1" => Ok(CoprimePair::MIXED_ROOT),
        "3,1" => Ok(CoprimePair::ODD_ROOT),
        other => Err(format!("root must be 2,1 or 3,1, got {other:?}")),
    }
}

fn parse_window(s: &str) -> Result<Window, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let &[x0, x1, y0, y1] = parts.as_slice() else {
        return Err(format!("want x_min,x_max,y_min,y_max, got {s:?}"));
    };
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    Window::new(num(x0)?, num(x1)?, num(y0)?, num(y1)?).map_err(|e| e.to_string())
}

fn parse_size(s: &str) -> Result<(u32, u32), String> {
    let (w, h) = s
        .split_once('x')
        .ok_or_else(|| format!("want WxH, got {s:?}"))?;
    let dim = |t: &str| -> Result<u32, String> {
        match t.parse() {
            Ok(0) | Err(_) => Err(format!("bad dimension {t:?}")),
            Ok(d) => Ok(d),
        }
    };
    Ok((dim(w)?, dim(h)?))
}

fn parse_colormap(s: &str) -> Result<ColormapSource, String> {
    Ok(match s {
        "builtin" => ColormapSource::Builtin,
        path => ColormapSource::File(PathBuf::from(path)),
    })
}

fn main() -> ExitCode {
    // Clap itself exits with code 2 and a diagnostic on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Tree {
            root,
            depth,
            include_root,
            format,
            out,
        } => {
            let nodes = enumerate(root, BezoutPair::STANDARD_SEED, depth, include_root)?;
            let records = nodes.map(|n| {
                n.map(|node| TreeRecord::from(&node))
                    .map_err(anyhow::Error::from)
            });
            let mut sink = open_sink(out.as_deref())?;
            match format {
                DumpFormat::Csv => dump::write_csv(&mut sink, records)?,
                DumpFormat::Jsonl => dump::write_jsonl(&mut sink, records)?,
            }
            sink.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            depth,
            patched,
            out,
        } => {
            let report = compare_forest(depth, patched)?;
            let mut json = serde_json::to_string_pretty(&report)?;
            json.push('\n');
            match out {
                Some(path) => std::fs::write(&path, json)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{json}"),
            }
            Ok(if report.conjecture_holds() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Bench { depth } => {
            println!("{}", bench_generation(depth)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Triple { m, n } => match CoprimePair::new(m, n) {
            Ok(pair) => {
                let t = pair.triple()?;
                println!("{} {} {}", t.x, t.y, t.z);
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => {
                // Bad pair arguments are a usage problem, not a runtime one.
                eprintln!("error: {e}");
                Ok(ExitCode::from(2))
            }
        },
        Command::Render {
            window,
            size,
            term_depth,
            motif,
            colormap,
            base_terms,
            swapped,
            threads,
            out,
        } => {
            let cfg = RenderConfig {
                window,
                width: size.0,
                height: size.1,
                term_depth,
                include_base_terms: base_terms,
                include_swapped: swapped,
                motif: motif.into(),
                colormap,
                output: Some(out),
                threads,
            };
            render_to_file(&cfg)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn open_sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("creating {}", path.display()))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}
