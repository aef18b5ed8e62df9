use std::fmt::Write as _;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;
use std::time::Instant;

use anyhow::Context;
use serde::Serialize;

use rlelz::factor::{Factor, Factorization};
use rlelz::offline::{factorize_offline, OfflineFactorizer};
use rlelz::online::OnlineFactorizer;
use rlelz::oracle::naive_s_factorize;
use rlelz::rle::RleString;
use rlelz::synth::{RunDist, SynthConfig};

use crate::{CliError, Format, Mode};

/// Inputs larger than this are refused by the naive mode unless forced.
pub const NAIVE_CAP: usize = 100_000;
/// Prefix length cross-checked against the naive oracle by `bench`.
const BENCH_ORACLE_PREFIX: usize = 2_000;

type Result<T = ()> = std::result::Result<T, CliError>;

fn read_input(path: &Path) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_end(&mut buf).context("reading standard input")
    } else {
        std::fs::File::open(path)
            .and_then(|mut f| f.read_to_end(&mut buf))
            .with_context(|| format!("reading {}", path.display()))
    }
    .map_err(CliError::Io)?;
    Ok(buf)
}

fn write_stdout(bytes: &[u8]) -> Result {
    let mut out = BufWriter::new(io::stdout().lock());
    out.write_all(bytes)?;
    out.flush()?;
    Ok(())
}

pub fn encode(input: &Path) -> Result {
    let text = read_input(input)?;
    write_stdout(RleString::encode(&text).to_text().as_bytes())
}

pub fn decode(input: &Path) -> Result {
    let raw = read_input(input)?;
    let text = String::from_utf8(raw)
        .map_err(|_| CliError::Usage(format!("{}: encoding is not valid UTF-8", input.display())))?;
    let rle = RleString::<u8>::parse_text(&text).map_err(|e| CliError::Usage(format!("{}: {e}", input.display())))?;
    write_stdout(&rle.decode())
}

fn check_naive_cap(len: usize, force: bool) -> Result {
    if len > NAIVE_CAP && !force {
        return Err(CliError::Usage(format!(
            "naive mode is limited to {NAIVE_CAP} characters (input has {len}); pass --force-naive to override"
        )));
    }
    Ok(())
}

fn online_lengths(rle: &RleString) -> (Vec<usize>, usize) {
    let mut fz = OnlineFactorizer::new();
    for &f in rle.runs() {
        fz.push_run(f).expect("runs of an encoded string alternate");
    }
    fz.finish();
    let lengths = fz.emitted().to_vec();
    (lengths, fz.into_dawg().stats().peak_live_pairs)
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum JsonFactor {
    Literal { char: u8, len: usize },
    Ref { src: usize, len: usize },
    Factor { len: usize },
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct Summary {
    N: usize,
    n: usize,
    n_lz: usize,
}

#[derive(Serialize)]
struct JsonReport {
    factors: Vec<JsonFactor>,
    summary: Summary,
}

pub fn factorize(input: &Path, mode: Mode, format: Format, force_naive: bool) -> Result {
    if mode == Mode::Online && format == Format::Pairs {
        return Err(CliError::Usage(
            "the online mode reports factor lengths only; use --format lengths or json, or another mode for pairs"
                .into(),
        ));
    }
    let text = read_input(input)?;
    if mode == Mode::Naive {
        check_naive_cap(text.len(), force_naive)?;
    }
    let rle = RleString::encode(&text);
    // online yields lengths only; the other modes yield full factors
    let (factors, lengths): (Option<Factorization>, Vec<usize>) = match mode {
        Mode::Offline => {
            let f = factorize_offline(&rle);
            let l = f.lengths();
            (Some(f), l)
        }
        Mode::Naive => {
            let f = naive_s_factorize(&text);
            let l = f.lengths();
            (Some(f), l)
        }
        Mode::Online => (None, online_lengths(&rle).0),
    };

    let mut out = String::new();
    match format {
        Format::Lengths => {
            for l in &lengths {
                writeln!(out, "{l}").unwrap();
            }
        }
        Format::Pairs => {
            for f in factors.as_ref().expect("pairs need full factors").iter() {
                match *f {
                    Factor::Literal(c) => writeln!(out, "L:{c:02x}").unwrap(),
                    Factor::Ref { src, len } => writeln!(out, "R:{src},{len}").unwrap(),
                }
            }
        }
        Format::Json => {
            let items = match &factors {
                Some(f) => f
                    .iter()
                    .map(|f| match *f {
                        Factor::Literal(c) => JsonFactor::Literal { char: c, len: 1 },
                        Factor::Ref { src, len } => JsonFactor::Ref { src, len },
                    })
                    .collect(),
                None => lengths.iter().map(|&len| JsonFactor::Factor { len }).collect(),
            };
            let report = JsonReport {
                factors: items,
                summary: Summary { N: rle.text_len(), n: rle.len(), n_lz: lengths.len() },
            };
            out = serde_json::to_string(&report).expect("report serializes");
            out.push('\n');
        }
    }
    write_stdout(out.as_bytes())
}

pub fn verify(input: &Path, force_naive: bool) -> Result {
    let text = read_input(input)?;
    let rle = RleString::encode(&text);
    let mut report = String::new();
    let mut failures = Vec::new();
    writeln!(report, "N={} n={}", rle.text_len(), rle.len()).unwrap();

    let offline = factorize_offline(&rle);
    let (online, _) = online_lengths(&rle);
    writeln!(report, "offline: {} factors", offline.len()).unwrap();
    writeln!(report, "online: {} factors", online.len()).unwrap();
    if offline.lengths() != online {
        failures.push("offline and online lengths differ");
    }
    if let Err(e) = offline.validate(&text) {
        writeln!(report, "offline factor check: {e}").unwrap();
        failures.push("an offline factor is invalid");
    }

    if text.len() <= NAIVE_CAP || force_naive {
        let naive = naive_s_factorize(&text);
        writeln!(report, "naive: {} factors", naive.len()).unwrap();
        if naive.lengths() != online {
            failures.push("naive lengths differ");
        }
        if naive.validate(&text).is_err() {
            failures.push("a naive factor is invalid");
        }
    } else {
        writeln!(report, "naive: skipped (above {NAIVE_CAP} characters)").unwrap();
    }

    let bound = 2 * rle.len();
    writeln!(report, "bound: {} <= {bound}", offline.len()).unwrap();
    if offline.len() > bound {
        failures.push("factor count exceeds twice the run count");
    }
    report.push_str(if failures.is_empty() { "PASS\n" } else { "FAIL\n" });
    write_stdout(report.as_bytes())?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verify(failures.join("; ")))
    }
}

pub fn ncd(a: &Path, b: &Path) -> Result {
    let (a, b) = (read_input(a)?, read_input(b)?);
    let d = rlelz::ncd::ncd(&a, &b);
    let out = format!("{:.6}\nC(A)={}\nC(B)={}\nC(AB)={}\n", d.value, d.c_a, d.c_b, d.c_ab);
    write_stdout(out.as_bytes())
}

pub fn bench(sizes: &[usize], sigma: usize, dist: RunDist, seed: u64) -> Result {
    let mut out = BufWriter::new(io::stdout().lock());
    writeln!(out, "N,n,mode,wall_time_s,peak_pairs")?;
    for (i, &len) in sizes.iter().enumerate() {
        let cfg = SynthConfig { len, sigma, dist };
        let text = cfg.generate_seeded(seed.wrapping_add(i as u64));
        let rle = RleString::encode(&text);

        let t = Instant::now();
        let mut off = OfflineFactorizer::new(&rle);
        let offline = off.run().lengths();
        let off_time = t.elapsed();

        let t = Instant::now();
        let (online, peak) = online_lengths(&rle);
        let on_time = t.elapsed();

        writeln!(out, "{len},{},offline,{:.6},{}", rle.len(), off_time.as_secs_f64(), off.stats().pairs_inserted)?;
        writeln!(out, "{len},{},online,{:.6},{peak}", rle.len(), on_time.as_secs_f64())?;
        out.flush()?;

        if offline != online {
            return Err(CliError::Verify(format!("N={len}: offline and online disagree")));
        }
        let prefix = &text[..len.min(BENCH_ORACLE_PREFIX)];
        let short = RleString::encode(prefix);
        let want = naive_s_factorize(prefix).lengths();
        if factorize_offline(&short).lengths() != want || online_lengths(&short).0 != want {
            return Err(CliError::Verify(format!("N={len}: disagreement with the naive oracle")));
        }
    }
    Ok(())
}
