use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use sedenion_cli::dot::{self, ExportTarget};
use sedenion_cli::render::{self, TableFormat};
use sedenion_cli::verify::{self, Suite, DEFAULT_SEED};
use sedenion_core::boxkite::{
    assemble_box_kites, box_kite, donut_map, lanyard_census, osiris_partition, parse_kite,
    recombinant_dna, seinfeld_census,
};
use sedenion_core::flowmorph::{
    apply_sign_pattern, canonical_fano, counting_order_search, is_flowmorphic, labeling_of_copy,
    missigned_triples, moreno_copy, reversal_multiplicities, SignPattern,
};
use sedenion_core::pathion::{hyper_box_kite, verify_hyper_edges};
use sedenion_core::{CdAlgebra, Sedenions};

/// Cayley-Dickson tables and the sedenion zero-divisor census.
#[derive(Parser)]
#[command(name = "sedenion", version)]
struct Cli {
    /// Seed for the scalar-sampling RNG.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit JSON instead of text where a command supports it.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplication table of the 2^N-ions.
    Table {
        #[arg(long, default_value_t = 4)]
        dim: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Pretty)]
        format: TableFormat,
    },
    /// Associative triples of the 2^N-ions.
    Trips {
        #[arg(long, default_value_t = 4)]
        dim: u32,
    },
    /// The 42 assessors.
    Assessors,
    /// The 28 co-assessor trios.
    Trios,
    /// The 168 zero-dividing couplings.
    Couplings,
    /// GoTo listing for an O-trip, or all seven.
    Goto {
        /// e.g. 1,2,3
        #[arg(long, value_parser = parse_triple)]
        otrip: Option<[usize; 3]>,
    },
    /// The Osiris partition.
    Osiris {
        /// Show only the kite each cell flies on.
        #[arg(long)]
        stripped: bool,
    },
    /// Box-kites: the strut table, or one kite in detail.
    Boxkites {
        #[arg(long, value_parser = parse_kite_arg)]
        kite: Option<u8>,
    },
    /// Lanyard census of one kite.
    Lanyards(KiteLen),
    /// Recombinant DNA on one strut pairing.
    Dna {
        #[arg(long, value_parser = parse_kite_arg)]
        kite: u8,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        position: u8,
    },
    /// Seinfeld case census with scalar sampling.
    Seinfeld {
        #[arg(long, value_parser = parse_kite_arg)]
        kite: u8,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Donut map for an O-trip.
    Donut {
        #[arg(long, value_parser = parse_triple)]
        otrip: [usize; 3],
    },
    /// Fano-plane sign and flow analysis.
    Fano(FanoArgs),
    /// Hyper-box-kite census in the 2^N-ions.
    Pathions {
        #[arg(long, default_value_t = 5)]
        dim: u32,
        #[arg(long, default_value_t = 15)]
        signature: usize,
    },
    /// Write a Graphviz file.
    Export {
        /// boxkite:K, donut:a,b,c, fano[:units] or pathion:N,S
        #[arg(long = "dot")]
        target: ExportTarget,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Args)]
struct KiteLen {
    #[arg(long, value_parser = parse_kite_arg)]
    kite: u8,
    #[arg(long, default_value_t = 12)]
    max_len: usize,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FanoArgs {
    /// Reversed-line counts over all 128 sign patterns.
    #[arg(long)]
    sign_flips: bool,
    /// Moreno copy generated by a,b,y.
    #[arg(long, value_parser = parse_triple)]
    moreno: Option<[usize; 3]>,
    /// Search for a signing with every line in counting order.
    #[arg(long)]
    counting_order: bool,
}

fn parse_triple(s: &str) -> Result<[usize; 3], String> {
    let v: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("not a number: {x:?}")))
        .collect::<Result<_, _>>()?;
    <[usize; 3]>::try_from(v).map_err(|_| "expected three comma-separated indices".to_string())
}

fn parse_kite_arg(s: &str) -> Result<u8, String> {
    parse_kite(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Io(String),
    Verify,
}

impl From<sedenion_core::Error> for Failure {
    fn from(e: sedenion_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("census types serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<String, Failure> {
    let sed = Sedenions::new();
    let as_json = cli.json;
    let pick = |text: String, value: String| if as_json { value } else { text };
    let out = match cli.command {
        Command::Table { dim, format } => render::table(&CdAlgebra::new(dim)?, format),
        Command::Trips { dim } => {
            let alg = CdAlgebra::new(dim)?;
            pick(render::trips(&alg), json(&alg.triples()))
        }
        Command::Assessors => pick(render::assessors(&sed), json(&sed.enumerate_assessors())),
        Command::Trios => pick(render::trios(&sed), json(&sed.enumerate_trios())),
        Command::Couplings => pick(render::couplings(&sed), json(&sed.enumerate_couplings())),
        Command::Goto { otrip } => {
            let listings = match otrip {
                Some(t) => vec![sed.goto_listing(sed.otrip_of(t)?)?],
                None => sed.goto_listings(),
            };
            pick(listings.iter().map(render::goto).collect(), json(&listings))
        }
        Command::Osiris { stripped } => {
            let p = osiris_partition(&sed);
            let value = if stripped {
                json(&p.stripped())
            } else {
                json(&p)
            };
            pick(render::osiris(&p, stripped), value)
        }
        Command::Boxkites { kite } => match kite {
            Some(s) => {
                let k = box_kite(&sed, s)?;
                pick(render::box_kite(&sed, &k), json(&k))
            }
            None => {
                let kites = assemble_box_kites(&sed);
                pick(render::strut_table(&kites), json(&kites))
            }
        },
        Command::Lanyards(KiteLen { kite, max_len }) => {
            let k = box_kite(&sed, kite)?;
            let c = lanyard_census(&sed, &k, max_len)?;
            pick(render::lanyards(&k, &c), json(&c))
        }
        Command::Dna { kite, position } => {
            let k = box_kite(&sed, kite)?;
            let r = recombinant_dna(&sed, &k, position as usize)?;
            pick(render::dna(&k, position as usize, &r), json(&r))
        }
        Command::Seinfeld { kite, samples } => {
            let k = box_kite(&sed, kite)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let c = seinfeld_census(&sed, &k, samples, &mut rng)?;
            pick(render::seinfeld(&k, &c), json(&c))
        }
        Command::Donut { otrip } => {
            let d = donut_map(&sed, sed.otrip_of(otrip)?)?;
            pick(render::donut(&d), json(&d))
        }
        Command::Fano(f) => fano(&sed, f, as_json)?,
        Command::Pathions { dim, signature } => {
            let k = hyper_box_kite(dim, signature)?;
            let c = verify_hyper_edges(&CdAlgebra::new(dim)?, &k)?;
            pick(
                render::pathion(&k, &c),
                json(&serde_json::json!({ "kite": k, "census": c })),
            )
        }
        Command::Export { target, out } => {
            let text = dot::render(&sed, &target).map_err(Failure::Usage)?;
            std::fs::write(&out, text)
                .map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            String::new()
        }
        Command::Verify { suite } => {
            let report = verify::run(suite, cli.seed);
            let text = if as_json {
                json(&report)
            } else {
                verify_text(&report)
            };
            if !report.all_passed() {
                print!("{text}");
                return Err(Failure::Verify);
            }
            text
        }
    };
    Ok(out)
}

fn fano(sed: &Sedenions, f: FanoArgs, as_json: bool) -> Result<String, Failure> {
    let alg = sed.algebra();
    if f.sign_flips {
        let counts = reversal_multiplicities();
        if as_json {
            return Ok(json(&counts));
        }
        let mut out = render::fano_labeling(&canonical_fano());
        out.push_str(&render::reversal_counts(&counts));
        for units in [vec![6], vec![6, 7]] {
            let pattern = SignPattern::new(&units)?;
            let (l, n) = apply_sign_pattern(&canonical_fano(), pattern);
            out.push_str(&format!("flip {units:?}: {n} lines reversed\n"));
            out.push_str(&render::fano_labeling(&l));
        }
        return Ok(out);
    }
    if let Some([a, b, y]) = f.moreno {
        let copy = moreno_copy(alg, a, b, y)?;
        let mis = missigned_triples(alg, &copy)?;
        let flow = is_flowmorphic(&labeling_of_copy(alg, &copy)?)?;
        if as_json {
            return Ok(json(&serde_json::json!({
                "copy": copy,
                "missigned": mis,
                "flowmorphic": flow,
                "harbors_zero_divisors": copy.harbors_zero_divisors(),
            })));
        }
        return Ok(render::moreno(&copy, &mis, flow));
    }
    let r = counting_order_search();
    Ok(if as_json {
        json(&r)
    } else {
        render::counting_order(&r)
    })
}

fn verify_text(r: &verify::VerificationReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        out.push_str(&format!(
            "{} [{:>2}] {:<26} {}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.criterion,
            c.id,
            c.description
        ));
        for f in &c.failures {
            out.push_str(&format!("       ! {f}\n"));
        }
    }
    out.push_str(&format!(
        "{} checks, {} passed, {} failed (seed {})\n",
        r.summary.total, r.summary.passed, r.summary.failed, r.seed
    ));
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
