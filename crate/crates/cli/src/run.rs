//! Command dispatch: resolve the code, run the computation, emit the report.

use std::io::Write;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use cosetforge_core::codes;
use cosetforge_core::cosets::{compute_coset_table_with_budget, DEFAULT_MAX_COSETS};
use cosetforge_core::decode::{all_coset_leaders_of, gradient_descent};
use cosetforge_core::leader_codewords::{leader_codewords_of_table, LeaderCodewordSet};
use cosetforge_core::oracle::{
    brute_coset_leaders_scan, brute_coset_leaders_translate, brute_leader_codewords,
    brute_zero_neighbours, greedy_min_testset, test_set_counterexample, OracleLimits,
};
use cosetforge_core::{CosetTable, Decoder, LinearCode, WeightCompatibleOrder, Word};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::args::{
    Action, Cli, Command, DecodeMode, DecodeOpts, OracleCheckOpts, Suite,
};
use crate::matrix_io;
use crate::report::{self, OracleCheckReport, SuiteOutcome};

/// Exit code for a failed verification (usage and I/O errors exit 1).
pub const MISMATCH_EXIT: i32 = 2;

/// Received words sampled per decode check when the space is too large to
/// scan exhaustively.
const DECODE_SAMPLES: u64 = 10_000;

/// Runs one parsed command, writing the report to `out`; returns the process
/// exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let (code, action) = match cli.command {
        Command::CosetLeaders { matrix, opts } => (load(&matrix)?, Action::CosetLeaders(opts)),
        Command::LeaderCodewords { matrix, opts } => {
            (load(&matrix)?, Action::LeaderCodewords(opts))
        }
        Command::Decode { matrix, opts } => (load(&matrix)?, Action::Decode(opts)),
        Command::Stats { matrix } => (load(&matrix)?, Action::Stats),
        Command::OracleCheck { matrix, opts } => (load(&matrix)?, Action::OracleCheck(opts)),
        Command::Builtin { name, action } => (builtin(&name)?, action),
    };

    if let Some(path) = &cli.dump_matrix {
        matrix_io::write_matrix(path, code.parity_check())?;
    }

    let order = cli.order.build(code.n());
    let label = cli.order.label();
    let budget = cli.max_cosets.unwrap_or(DEFAULT_MAX_COSETS);
    let table = || -> Result<CosetTable> {
        compute_coset_table_with_budget(&code, &order, budget).map_err(Into::into)
    };

    match action {
        Action::CosetLeaders(opts) => {
            let rep = report::coset_leaders_report(&table()?, label);
            if cli.json {
                write!(out, "{}", report::to_json(&rep))?;
            } else {
                write!(out, "{}", report::render_coset_leaders(&rep, opts.stats))?;
            }
            Ok(0)
        }
        Action::LeaderCodewords(opts) => {
            let table = table()?;
            let lead = leader_codewords_of_table(&table);
            let rep = report::leader_codewords_report(&code, &lead, label, opts.l1_only);
            if cli.json {
                write!(out, "{}", report::to_json(&rep))?;
            } else {
                write!(out, "{}", report::render_leader_codewords(&rep, opts.l1_only))?;
            }
            Ok(0)
        }
        Action::Decode(opts) => {
            let rep = decode(&code, &order, label, &table()?, &opts)?;
            if cli.json {
                write!(out, "{}", report::to_json(&rep))?;
            } else {
                write!(out, "{}", report::render_decode(&rep))?;
            }
            Ok(0)
        }
        Action::Stats => {
            let table = table()?;
            let lead = leader_codewords_of_table(&table);
            let rep = report::stats_report(&table, &lead, label);
            if cli.json {
                write!(out, "{}", report::to_json(&rep))?;
            } else {
                write!(out, "{}", report::render_stats(&rep))?;
            }
            Ok(0)
        }
        Action::OracleCheck(opts) => {
            let rep = oracle_check(&code, &order, label, &table()?, &opts);
            if cli.json {
                write!(out, "{}", report::to_json(&rep))?;
            } else {
                write!(out, "{}", report::render_oracle_check(&rep))?;
            }
            let failed = rep.suites.iter().any(|s| s.status == "fail");
            Ok(if failed { MISMATCH_EXIT } else { 0 })
        }
    }
}

fn load(path: &Path) -> Result<LinearCode> {
    let matrix = matrix_io::read_matrix(path)?;
    LinearCode::from_parity_check(&matrix)
        .with_context(|| format!("matrix file {} does not define a code", path.display()))
}

fn builtin(name: &str) -> Result<LinearCode> {
    codes::by_name(name).ok_or_else(|| {
        anyhow!("unknown built-in code {name:?}; available: {}", codes::BUILTIN_NAMES.join(", "))
    })
}

fn decode(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    label: &str,
    table: &CosetTable,
    opts: &DecodeOpts,
) -> Result<report::DecodeReport> {
    let y = Word::from_bit_str(&opts.word).context("cannot parse the received word")?;
    if y.len() != code.n() {
        bail!("received word has length {}, but the code has length {}", y.len(), code.n());
    }

    let (error, nearest): (Word, Vec<Word>) = match opts.mode {
        DecodeMode::Table => {
            let rec = table.record_of(&y);
            (rec.representative.clone(), rec.leaders.clone())
        }
        DecodeMode::Testset => {
            let lead = leader_codewords_of_table(table);
            let residual = gradient_descent(&y, &lead.l1_subset())
                .context("gradient descent over L1 did not terminate")?;
            let nearest = all_coset_leaders_of(&residual, &lead.sorted_words(), order);
            (residual, nearest)
        }
    };

    Ok(report::DecodeReport {
        schema: report::SCHEMA,
        n: code.n(),
        k: code.k(),
        order: label.to_string(),
        mode: opts.mode.label().to_string(),
        received: y.to_bit_string(),
        codeword: (&y ^ &error).to_bit_string(),
        error: error.to_bit_string(),
        distance: error.weight(),
        unique: nearest.len() == 1,
        all_nearest: opts
            .all_nearest
            .then(|| nearest.iter().map(Word::to_bit_string).collect()),
    })
}

fn oracle_check(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    label: &str,
    table: &CosetTable,
    opts: &OracleCheckOpts,
) -> OracleCheckReport {
    let mut limits = OracleLimits::default();
    if let Some(n) = opts.max_oracle_n {
        limits = OracleLimits { max_scan_n: n, max_voronoi_n: n, max_cover_n: n };
    }
    let lead = leader_codewords_of_table(table);

    let chosen: &[Suite] = match opts.suite {
        Suite::All => &[Suite::Leaders, Suite::Testset, Suite::Zeroneighbours, Suite::Decode],
        Suite::Leaders => &[Suite::Leaders],
        Suite::Testset => &[Suite::Testset],
        Suite::Zeroneighbours => &[Suite::Zeroneighbours],
        Suite::Decode => &[Suite::Decode],
    };

    let suites = chosen
        .iter()
        .map(|suite| match suite {
            Suite::Leaders => outcome("leaders", check_leaders(code, order, table, &limits)),
            Suite::Testset => outcome("testset", check_testset(code, order, &lead, &limits)),
            Suite::Zeroneighbours => {
                outcome("zeroneighbours", check_zero_neighbours(code, order, &lead, &limits))
            }
            Suite::Decode => outcome("decode", check_decode(code, table, &lead, opts.seed)),
            Suite::All => unreachable!("`all` expands to the concrete suites"),
        })
        .collect();

    OracleCheckReport {
        schema: report::SCHEMA,
        n: code.n(),
        k: code.k(),
        order: label.to_string(),
        suites,
    }
}

/// Folds a suite result into an outcome; guard violations become skips.
fn outcome(
    name: &str,
    result: std::result::Result<SuiteOutcome, cosetforge_core::Error>,
) -> SuiteOutcome {
    result.unwrap_or_else(|e| SuiteOutcome {
        name: name.to_string(),
        status: "skip".to_string(),
        detail: e.to_string(),
    })
}

fn pass(name: &str, detail: String) -> SuiteOutcome {
    SuiteOutcome { name: name.to_string(), status: "pass".to_string(), detail }
}

fn fail(name: &str, detail: String) -> SuiteOutcome {
    SuiteOutcome { name: name.to_string(), status: "fail".to_string(), detail }
}

fn skip(name: &str, detail: String) -> SuiteOutcome {
    SuiteOutcome { name: name.to_string(), status: "skip".to_string(), detail }
}

/// First position where two ascending word lists differ, rendered.
fn first_difference(engine: &[Word], oracle: &[Word]) -> Option<String> {
    let render = |w: Option<&Word>| match w {
        Some(w) => w.to_bit_string(),
        None => "<absent>".to_string(),
    };
    for idx in 0..engine.len().max(oracle.len()) {
        let (a, b) = (engine.get(idx), oracle.get(idx));
        if a != b {
            return Some(format!(
                "first difference at index {idx}: engine {} vs oracle {}",
                render(a),
                render(b)
            ));
        }
    }
    None
}

fn check_leaders(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    table: &CosetTable,
    limits: &OracleLimits,
) -> std::result::Result<SuiteOutcome, cosetforge_core::Error> {
    const NAME: &str = "leaders";
    let scan = brute_coset_leaders_scan(code, order, limits)?;
    let translate = brute_coset_leaders_translate(code, order, limits)?;
    if scan != translate {
        return Ok(fail(
            NAME,
            "the full-space scan and per-coset translate oracles disagree".to_string(),
        ));
    }

    if table.coset_count() != scan.strata().len() as u64 {
        return Ok(fail(
            NAME,
            format!(
                "engine has {} cosets, oracle has {}",
                table.coset_count(),
                scan.strata().len()
            ),
        ));
    }
    for stratum in scan.strata() {
        let rec = table
            .record_of_syndrome(&stratum.syndrome)
            .expect("engine table covers every syndrome");
        if rec.weight != stratum.weight {
            return Ok(fail(
                NAME,
                format!(
                    "coset {}: engine weight {}, oracle weight {}",
                    stratum.syndrome.to_bit_string(),
                    rec.weight,
                    stratum.weight
                ),
            ));
        }
        if let Some(diff) = first_difference(&rec.leaders, &stratum.leaders) {
            return Ok(fail(
                NAME,
                format!("coset {}: {}", stratum.syndrome.to_bit_string(), diff),
            ));
        }
    }

    // Matphi structure on the engine table: involution and syndrome shifts.
    let matphi = table.matphi();
    let records = table.records();
    for r in 0..matphi.record_count() {
        for i in 1..=code.n() {
            let s = matphi.apply(r, i);
            if matphi.apply(s, i) != r {
                return Ok(fail(NAME, format!("matphi involution broken at ({r}, e_{i})")));
            }
            let expected = &records[r as usize].syndrome ^ &code.parity_check().column(i);
            if records[s as usize].syndrome != expected {
                return Ok(fail(
                    NAME,
                    format!("matphi syndrome consistency broken at ({r}, e_{i})"),
                ));
            }
        }
    }

    Ok(pass(
        NAME,
        format!(
            "{} cosets, {} leaders match both oracles; matphi involution and syndrome \
             consistency hold",
            table.coset_count(),
            table.leader_count()
        ),
    ))
}

fn check_testset(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    lead: &LeaderCodewordSet,
    limits: &OracleLimits,
) -> std::result::Result<SuiteOutcome, cosetforge_core::Error> {
    const NAME: &str = "testset";
    let brute = brute_leader_codewords(code, order, limits)?;
    if let Some(diff) = first_difference(&lead.sorted_words(), &brute.words) {
        return Ok(fail(NAME, format!("L(C): {diff}")));
    }
    if let Some(diff) = first_difference(&lead.l1_subset(), &brute.l1) {
        return Ok(fail(NAME, format!("L1(C): {diff}")));
    }
    if let Some(counterexample) = test_set_counterexample(code, &lead.l1_subset(), limits)? {
        return Ok(fail(
            NAME,
            format!(
                "L1(C) is not a test set: no element lowers the weight of {}",
                counterexample.to_bit_string()
            ),
        ));
    }
    Ok(pass(
        NAME,
        format!(
            "|L| = {} and |L1| = {} match the rewriting oracle; L1 verified as a test set",
            lead.len(),
            lead.l1_len()
        ),
    ))
}

fn check_zero_neighbours(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    lead: &LeaderCodewordSet,
    limits: &OracleLimits,
) -> std::result::Result<SuiteOutcome, cosetforge_core::Error> {
    const NAME: &str = "zeroneighbours";
    let neighbours = brute_zero_neighbours(code, order, limits)?;
    if let Some(diff) = first_difference(&lead.sorted_words(), &neighbours.frontier_reaching) {
        return Ok(fail(NAME, format!("frontier-reaching neighbours vs L(C): {diff}")));
    }
    let mut detail = format!(
        "frontier-reaching zero neighbours equal L(C) ({} words; {} boundary-touching)",
        neighbours.frontier_reaching.len(),
        neighbours.boundary_touching.len()
    );
    if code.n() <= limits.max_cover_n {
        let greedy = greedy_min_testset(code, order, limits)?;
        if let Some(outside) = greedy.iter().find(|z| !lead.contains(z)) {
            return Ok(fail(
                NAME,
                format!(
                    "greedy minimal test set uses {} outside L(C)",
                    outside.to_bit_string()
                ),
            ));
        }
        detail.push_str(&format!("; greedy minimal test set of {} words is inside L(C)", greedy.len()));
    }
    Ok(pass(NAME, detail))
}

fn check_decode(
    code: &LinearCode,
    table: &CosetTable,
    lead: &LeaderCodewordSet,
    seed: u64,
) -> std::result::Result<SuiteOutcome, cosetforge_core::Error> {
    const NAME: &str = "decode";
    const EXHAUSTIVE_N: u32 = 12;
    const SAMPLED_K: u32 = 16;

    let n = code.n();
    if n > EXHAUSTIVE_N && code.k() > SAMPLED_K {
        return Ok(skip(
            NAME,
            format!(
                "dimension {} exceeds the nearest-codeword brute-force cap {SAMPLED_K}",
                code.k()
            ),
        ));
    }
    let codewords: Vec<Word> = code.codewords()?.collect();
    let l1 = lead.l1_subset();

    let check_one = |y: &Word| -> Option<SuiteOutcome> {
        let best = codewords.iter().map(|c| y.distance(c)).min().expect("k >= 1");
        let via_table = Decoder::Table(table).decode(y).expect("table decoding is total");
        if via_table.error_pattern.weight() != best {
            return Some(fail(
                NAME,
                format!(
                    "received {}: table decoder distance {}, exhaustive minimum {best}",
                    y.to_bit_string(),
                    via_table.error_pattern.weight()
                ),
            ));
        }
        match (Decoder::GradientDescent { test_set: &l1 }).decode(y) {
            Ok(via_gd) if via_gd.error_pattern.weight() == best => None,
            Ok(via_gd) => Some(fail(
                NAME,
                format!(
                    "received {}: gradient descent distance {}, exhaustive minimum {best}",
                    y.to_bit_string(),
                    via_gd.error_pattern.weight()
                ),
            )),
            Err(_) => Some(fail(
                NAME,
                format!("gradient descent stalled on {}", y.to_bit_string()),
            )),
        }
    };

    if n <= EXHAUSTIVE_N {
        for packed in 0..1u64 << n {
            if let Some(outcome) = check_one(&Word::from_u64(n, packed)) {
                return Ok(outcome);
            }
        }
        Ok(pass(
            NAME,
            format!(
                "table and gradient-descent decoders are distance-optimal on all 2^{n} \
                 received words"
            ),
        ))
    } else {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        for _ in 0..DECODE_SAMPLES {
            if let Some(outcome) = check_one(&random_word(&mut rng, n)) {
                return Ok(outcome);
            }
        }
        Ok(pass(
            NAME,
            format!(
                "table and gradient-descent decoders are distance-optimal on \
                 {DECODE_SAMPLES} sampled received words (seed {seed})"
            ),
        ))
    }
}

/// A uniformly random word of length `n`.
fn random_word(rng: &mut impl Rng, n: u32) -> Word {
    if n <= 64 {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Word::from_u64(n, rng.gen::<u64>() & mask)
    } else {
        let mut w = Word::zero(n);
        for i in 1..=n {
            if rng.gen() {
                w.set(i, true);
            }
        }
        w
    }
}
