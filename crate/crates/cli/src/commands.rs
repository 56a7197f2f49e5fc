use crate::args::{parse_range, Cli, Command, Format};
use crate::cache::{self, Cache};
use crate::output::*;
use crate::sweep::{self, DegreePolicy, SweepSpec};
use powideal::error::Error;
use powideal::exec::ExecMode;
use powideal::hilbert::{hf_table, numerator_from_hf, series_closed_form, Method};
use powideal::oracle::{fat_oracle, hf_oracle, hf_table_oracle, OracleConfig};
use powideal::{fatpoints, grading, Params};
use std::path::PathBuf;

/// A command failure carrying its exit code; the message goes to stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn unavailable(message: impl Into<String>) -> Self {
        Failure { code: 4, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParams(_) => 2,
            Error::ResourceGuard { .. } => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

pub fn run(cli: Cli) -> i32 {
    let mode = match cli.jobs {
        Some(0) => {
            eprintln!("error: --jobs must be at least 1");
            return 2;
        }
        Some(1) => ExecMode::Sequential,
        _ => ExecMode::Parallel,
    };
    let outcome = match cli.jobs {
        Some(jobs) if jobs > 1 => {
            match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
                Ok(pool) => pool.install(|| dispatch(&cli, mode)),
                Err(e) => Err(Failure::invalid(format!("cannot build worker pool: {e}"))),
            }
        }
        _ => dispatch(&cli, mode),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, mode: ExecMode) -> Result<i32, Failure> {
    let cfg = OracleConfig { max_block_entries: cli.max_block_entries, mode };
    match &cli.command {
        Command::Hf { n, k, d, degree, method } => cmd_hf(cli, &cfg, *n, *k, *d, *degree, method.as_deref()),
        Command::Series { n, k, d, from_hf } => cmd_series(cli, *n, *k, *d, *from_hf),
        Command::Betti { n, k, d } => cmd_betti(cli, *n, *k, *d),
        Command::Gens { n, k, d } => cmd_gens(cli, *n, *k, *d),
        Command::Fatpoints { n, k, d, degree, oracle, gens } => {
            cmd_fatpoints(cli, &cfg, *n, *k, *d, *degree, *oracle, *gens)
        }
        Command::Verify { n, k, d, degrees, methods } => cmd_verify(cli, mode, n, k, d, degrees, methods),
    }
}

fn params_out(p: &Params) -> ParamsOut {
    ParamsOut { n: p.n(), k: p.k(), d: p.d() }
}

fn cmd_hf(
    cli: &Cli,
    cfg: &OracleConfig,
    n: u32,
    k: u32,
    d: u32,
    degree: Option<u32>,
    method: Option<&str>,
) -> Result<i32, Failure> {
    let p = Params::new(n, k, d)?;
    let method = match method {
        None => {
            if p.k() == 2 {
                Method::ProvedK2
            } else {
                Method::Conjectured
            }
        }
        Some(tag) => Method::from_tag(tag).ok_or_else(|| Failure::invalid(format!("unknown method `{tag}`")))?,
    };
    let values: Vec<String> = match (method, degree) {
        (Method::Oracle, Some(i)) => vec![hf_oracle(&p, i, cfg)?.to_string()],
        (Method::Oracle, None) => hf_table_oracle(&p, cfg)?.values().iter().map(|v| v.to_string()).collect(),
        (_, Some(i)) => vec![hf_table(&p, method)?.get(i).to_string()],
        (_, None) => hf_table(&p, method)?.values().iter().map(|v| v.to_string()).collect(),
    };
    let report = HfReport {
        params: params_out(&p),
        method: method.tag().to_string(),
        values,
        conjectural: method.is_conjectural_for(&p),
        degree,
    };
    if report.conjectural && cli.format == Format::Text {
        eprintln!("note: k > 2 values come from the conjectured algorithm");
    }
    emit(cli.format, &report.text(), || to_json(&report), || report.csv());
    Ok(0)
}

fn cmd_series(cli: &Cli, n: u32, k: u32, d: u32, from_hf: bool) -> Result<i32, Failure> {
    let p = Params::new(n, k, d)?;
    let (series, conjectural) = if from_hf {
        let method = if p.k() == 2 { Method::ProvedK2 } else { Method::Conjectured };
        let table = hf_table(&p, method)?;
        (numerator_from_hf(&table)?, method.is_conjectural_for(&p))
    } else {
        match series_closed_form(&p) {
            Ok(s) => (s, false),
            Err(e) => return Err(Failure::unavailable(format!("{e}; pass --from-hf to compute the numerator from the table"))),
        }
    };
    let report = SeriesReport {
        params: params_out(&p),
        method: "series".to_string(),
        numerator: series.numerator.coeffs().iter().map(|c| c.to_string()).collect(),
        denom_exponent: series.denom_exponent,
        conjectural,
    };
    emit(cli.format, &report.text(), || to_json(&report), || report.csv());
    Ok(0)
}

fn cmd_betti(cli: &Cli, n: u32, k: u32, d: u32) -> Result<i32, Failure> {
    let table = fatpoints::betti(n, k, d)?;
    let entries = table
        .betti()
        .iter()
        .enumerate()
        .map(|(idx, b)| {
            let i = idx as u32 + 1;
            BettiEntry { i, degree: table.shift(i), value: b.to_string() }
        })
        .collect();
    let report = BettiReport { params: ParamsOut { n, k, d }, entries };
    emit(cli.format, &report.text(), || to_json(&report), || report.csv());
    Ok(0)
}

fn cmd_gens(cli: &Cli, n: u32, k: u32, d: u32) -> Result<i32, Failure> {
    let p = Params::new(n, k, d)?;
    let report = GensReport { params: params_out(&p), count: grading::gens_count(&p).to_string() };
    emit(cli.format, &report.text(), || to_json(&report), || report.csv(p.gen_degree()));
    Ok(0)
}

fn cmd_fatpoints(
    cli: &Cli,
    cfg: &OracleConfig,
    n: u32,
    k: u32,
    d: u32,
    degree: Option<u32>,
    oracle: bool,
    gens: bool,
) -> Result<i32, Failure> {
    if gens {
        let polys = fatpoints::fat_generators(n, k, d)?;
        let report = FatGensReport {
            params: ParamsOut { n, k, d },
            degree: k * d,
            generators: polys.iter().map(|g| g.to_string()).collect(),
        };
        emit(cli.format, &report.text(), || to_json(&report), || report.csv());
        return Ok(0);
    }
    match degree {
        Some(m) => {
            let (method, value) = if oracle {
                ("fat-oracle", fat_oracle(n, k, d, m, cfg)?)
            } else {
                ("fat-series", fatpoints::fat_hf(n, k, d, m)?)
            };
            let report = HfReport {
                params: ParamsOut { n, k, d },
                method: method.to_string(),
                values: vec![value.to_string()],
                conjectural: false,
                degree: Some(m),
            };
            emit(cli.format, &report.text(), || to_json(&report), || report.csv());
            Ok(0)
        }
        None => {
            if oracle {
                return Err(Failure::invalid("--oracle needs --degree (the oracle computes one degree at a time)"));
            }
            let series = fatpoints::fat_series(n, k, d)?;
            let report = SeriesReport {
                params: ParamsOut { n, k, d },
                method: "fat-series".to_string(),
                numerator: series.numerator.coeffs().iter().map(|c| c.to_string()).collect(),
                denom_exponent: series.denom_exponent,
                conjectural: false,
            };
            emit(cli.format, &report.text(), || to_json(&report), || report.csv());
            Ok(0)
        }
    }
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    cli.cache
        .clone()
        .or_else(|| std::env::var_os("POWIDEAL_CACHE").map(PathBuf::from))
}

fn cmd_verify(cli: &Cli, mode: ExecMode, n: &str, k: &str, d: &str, degrees: &str, methods: &str) -> Result<i32, Failure> {
    let n = parse_range(n).map_err(Failure::invalid)?;
    let k = parse_range(k).map_err(Failure::invalid)?;
    let d = parse_range(d).map_err(Failure::invalid)?;
    let degrees = if degrees == "all" {
        DegreePolicy::All
    } else {
        let (lo, hi) = parse_range(degrees).map_err(Failure::invalid)?;
        DegreePolicy::Range(lo, hi)
    };
    let methods = methods
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|tag| Method::from_tag(tag).ok_or_else(|| Failure::invalid(format!("unknown method `{tag}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    let spec = SweepSpec {
        n,
        k,
        d,
        degrees,
        methods,
        max_block_entries: cli.max_block_entries,
        mode,
        skip_guarded: cli.skip_guarded,
    };
    spec.validate().map_err(Failure::invalid)?;

    let path = cache_path(cli);
    let cache = match &path {
        Some(p) => cache::load(p).map_err(Failure::invalid)?,
        None => Cache::default(),
    };
    let result = sweep::run(&spec, &cache)?;
    if let Some(p) = &path {
        cache::append(p, &cache, &result.new_records).map_err(Failure::invalid)?;
    }

    match cli.format {
        Format::Text => println!("{}", result.report.text()),
        Format::Json => println!("{}", to_json(&result.report)),
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            for rec in &result.all_values {
                out.push_str(&format!("\n{},{},{},{},{},{}", rec.0, rec.1, rec.2, rec.3, rec.4, rec.5));
            }
            println!("{out}");
        }
    }

    if result.report.summary.disagreements > 0 {
        return Ok(1);
    }
    if result.guarded > 0 && !cli.skip_guarded {
        eprintln!(
            "error: {} value(s) hit the resource guard (limit {} entries); rerun with --skip-guarded or raise --max-block-entries",
            result.guarded, cli.max_block_entries
        );
        return Ok(3);
    }
    Ok(0)
}

fn emit(format: Format, text: &str, json: impl FnOnce() -> String, csv: impl FnOnce() -> String) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", json()),
        Format::Csv => println!("{}", csv()),
    }
}
