//! `words`: exact counts and generating functions for words with run and
//! pattern restrictions, with built-in brute-force verification.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use laguerre_words::oracle::{
    compositions, contains_vincular, count_arrangements, count_avoiding_words,
    count_cyclic_avoiding_words, cyclically_avoids, respects_run_caps, Letter, Word,
    DEFAULT_BUDGET,
};
use laguerre_words::patterns::{
    carlitz_arrangements, cyclic_avoiders_gf, cyclic_carlitz_compositions_gf,
    cyclic_run_limited_arrangements, run_limited_arrangements, subword_avoid_count,
    vincular_avoiders_gf, LetterSpec, MultisetSpec, VincularPattern,
};
use laguerre_words::{Count, Error, Series};
use serde::{Deserialize, Serialize};

const DEFAULT_ORDER: usize = 12;

#[derive(Parser)]
#[command(name = "words", version, about = "Exact enumeration of words with run and pattern restrictions")]
struct Cli {
    /// Emit a structured JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Clone)]
enum Command {
    #[command(flatten)]
    Base(BaseCommand),
    /// Recompute a query with the brute-force oracle and compare.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Clone)]
enum BaseCommand {
    /// Arrangements of a multiset with no two equal adjacent letters.
    Carlitz(CarlitzArgs),
    /// Arrangements of a multiset with per-letter run caps.
    RunLimited(RunLimitedArgs),
    /// Series counting k-ary words avoiding a vincular pattern of runs.
    Avoid(AvoidArgs),
    /// Series counting k-ary words whose every rotation avoids a uniform
    /// pattern of runs.
    CyclicAvoid(CyclicAvoidArgs),
    /// Arrangements of a multiset whose every rotation has runs shorter
    /// than m.
    CyclicRunLimited(CyclicRunLimitedArgs),
    /// Words from a letter multiset with no occurrence of a forbidden
    /// contiguous subword.
    SubwordAvoid(SubwordAvoidArgs),
    /// Series counting cyclic Carlitz compositions by sum.
    CyclicCarlitzCompositions(OrderArgs),
}

#[derive(Args, Clone)]
struct CarlitzArgs {
    /// Letter multiplicities, e.g. 1,4,4,2.
    #[arg(long)]
    counts: String,
}

#[derive(Args, Clone)]
struct RunLimitedArgs {
    /// Comma-separated n:m pairs; the letter appears n times with every
    /// run shorter than m, e.g. 2:2,4:3,4:3.
    #[arg(long)]
    spec: String,
}

#[derive(Args, Clone)]
struct AvoidArgs {
    /// Alphabet size.
    #[arg(long)]
    k: usize,
    /// Dash-separated run lengths, e.g. 2-2 for the pattern 11-11.
    #[arg(long)]
    pattern: String,
    /// Series truncation order.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
}

#[derive(Args, Clone)]
struct CyclicAvoidArgs {
    /// Alphabet size.
    #[arg(long)]
    k: usize,
    /// Run length of each block.
    #[arg(long)]
    m: usize,
    /// Number of blocks.
    #[arg(long)]
    blocks: usize,
    /// Series truncation order.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
}

#[derive(Args, Clone)]
struct CyclicRunLimitedArgs {
    /// Run cap: every cyclic run must be shorter than m.
    #[arg(long)]
    m: usize,
    /// Letter multiplicities, e.g. 2,2.
    #[arg(long)]
    counts: String,
}

#[derive(Args, Clone)]
struct SubwordAvoidArgs {
    /// Available letters with multiplicity, e.g. CONSTANTINOPLE.
    #[arg(long)]
    letters: String,
    /// Forbidden contiguous subword, e.g. TNT.
    #[arg(long)]
    forbidden: String,
}

#[derive(Args, Clone)]
struct OrderArgs {
    /// Series truncation order.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
}

#[derive(Args, Clone)]
struct VerifyArgs {
    /// Largest length the oracle recomputes for series commands.
    #[arg(long, default_value_t = 8)]
    oracle_max_len: usize,
    #[command(subcommand)]
    command: BaseCommand,
}

/// Structured result of one query.
#[derive(Serialize, Deserialize)]
struct QueryResult {
    command: String,
    params: serde_json::Value,
    kind: String,
    values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified_to: Option<usize>,
}

enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// Enumeration budget exceeded: exit code 3.
    Budget(String),
    /// Internal invariant violated, including verify mismatches: exit 1.
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
            Failure::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Budget(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::LetterMissing { .. }
            | Error::AlphabetOverlap { .. }
            | Error::NonzeroConstant => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn oracle_budget() -> Result<u64, Failure> {
    match std::env::var("WORDS_ORACLE_BUDGET") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Usage(format!("WORDS_ORACLE_BUDGET is not an integer: {v}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn parse_counts(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad count {p:?}")))
        })
        .collect()
}

fn parse_spec(s: &str) -> Result<MultisetSpec, Failure> {
    let mut entries = Vec::new();
    for (i, pair) in s.split(',').enumerate() {
        let (n, m) = pair
            .trim()
            .split_once(':')
            .ok_or_else(|| Failure::Usage(format!("bad n:m pair {pair:?}")))?;
        let n: usize = n
            .parse()
            .map_err(|_| Failure::Usage(format!("bad multiplicity {n:?}")))?;
        let m: usize = m
            .parse()
            .map_err(|_| Failure::Usage(format!("bad run cap {m:?}")))?;
        if m < 2 {
            return Err(Failure::Usage(format!("run cap must be at least 2, got {m}")));
        }
        entries.push(LetterSpec {
            letter: i as Letter + 1,
            count: n,
            run_cap: Some(m),
        });
    }
    Ok(MultisetSpec::new(entries))
}

fn parse_pattern(s: &str) -> Result<VincularPattern, Failure> {
    let blocks: Vec<usize> = s
        .split('-')
        .map(|p| {
            p.trim().parse().map_err(|_| {
                Failure::Usage(format!("bad block length {p:?} in pattern {s:?}"))
            })
        })
        .collect::<Result<_, _>>()?;
    if blocks.is_empty() || blocks.iter().any(|&m| m == 0) {
        return Err(Failure::Usage(format!("pattern {s:?} needs positive blocks")));
    }
    Ok(VincularPattern::new(blocks))
}

/// Maps a letter string to a multiset (ids by first appearance) plus the
/// char-to-id table.
fn parse_letter_multiset(letters: &str) -> (MultisetSpec, BTreeMap<char, Letter>) {
    let mut ids = BTreeMap::new();
    let mut counts: Vec<usize> = Vec::new();
    for c in letters.chars() {
        let next = ids.len() as Letter + 1;
        let id = *ids.entry(c).or_insert(next);
        if id as usize > counts.len() {
            counts.push(0);
        }
        counts[id as usize - 1] += 1;
    }
    let entries = counts
        .iter()
        .enumerate()
        .map(|(i, &n)| LetterSpec {
            letter: i as Letter + 1,
            count: n,
            run_cap: None,
        })
        .collect();
    (MultisetSpec::new(entries), ids)
}

fn count_result(command: &str, params: serde_json::Value, value: Count) -> QueryResult {
    QueryResult {
        command: command.to_string(),
        params,
        kind: "integer".to_string(),
        values: vec![value.to_string()],
        order: None,
        verified_to: None,
    }
}

fn series_result(command: &str, params: serde_json::Value, series: &Series) -> QueryResult {
    let values = series
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_constant());
            let r = c.coeff(0);
            debug_assert!(r.is_integer());
            r.to_integer().to_string()
        })
        .collect();
    QueryResult {
        command: command.to_string(),
        params,
        kind: "series".to_string(),
        values,
        order: Some(series.order()),
        verified_to: None,
    }
}

fn run_base(cmd: &BaseCommand) -> Result<QueryResult, Failure> {
    match cmd {
        BaseCommand::Carlitz(args) => {
            let counts = parse_counts(&args.counts)?;
            let value = carlitz_arrangements(&counts);
            Ok(count_result(
                "carlitz",
                serde_json::json!({ "counts": counts }),
                value,
            ))
        }
        BaseCommand::RunLimited(args) => {
            let spec = parse_spec(&args.spec)?;
            let value = run_limited_arrangements(&spec);
            Ok(count_result(
                "run-limited",
                serde_json::json!({ "spec": args.spec }),
                value,
            ))
        }
        BaseCommand::Avoid(args) => {
            let pattern = parse_pattern(&args.pattern)?;
            let series = vincular_avoiders_gf(args.k, &pattern, args.order);
            Ok(series_result(
                "avoid",
                serde_json::json!({ "k": args.k, "pattern": args.pattern, "order": args.order }),
                &series,
            ))
        }
        BaseCommand::CyclicAvoid(args) => {
            if args.k == 0 || args.m == 0 || args.blocks == 0 {
                return Err(Failure::Usage(
                    "k, m and blocks must be positive".to_string(),
                ));
            }
            let series = cyclic_avoiders_gf(args.k, args.m, args.blocks, args.order)?;
            Ok(series_result(
                "cyclic-avoid",
                serde_json::json!({
                    "k": args.k, "m": args.m, "blocks": args.blocks, "order": args.order
                }),
                &series,
            ))
        }
        BaseCommand::CyclicRunLimited(args) => {
            let counts = parse_counts(&args.counts)?;
            if args.m < 2 {
                return Err(Failure::Usage(format!(
                    "run cap must be at least 2, got {}",
                    args.m
                )));
            }
            let value = cyclic_run_limited_arrangements(args.m, &counts)?;
            Ok(count_result(
                "cyclic-run-limited",
                serde_json::json!({ "m": args.m, "counts": counts }),
                value,
            ))
        }
        BaseCommand::SubwordAvoid(args) => {
            let (spec, ids) = parse_letter_multiset(&args.letters);
            let forbidden: Vec<Letter> = args
                .forbidden
                .chars()
                .map(|c| {
                    ids.get(&c).copied().ok_or_else(|| {
                        Failure::Usage(format!("forbidden letter {c:?} is not available"))
                    })
                })
                .collect::<Result<_, _>>()?;
            if forbidden.is_empty() {
                return Err(Failure::Usage("forbidden word is empty".to_string()));
            }
            let value = subword_avoid_count(&spec, &Word(forbidden))?;
            Ok(count_result(
                "subword-avoid",
                serde_json::json!({ "letters": args.letters, "forbidden": args.forbidden }),
                value,
            ))
        }
        BaseCommand::CyclicCarlitzCompositions(args) => {
            let series = cyclic_carlitz_compositions_gf(args.order);
            Ok(series_result(
                "cyclic-carlitz-compositions",
                serde_json::json!({ "order": args.order }),
                &series,
            ))
        }
    }
}

/// Oracle value per series coefficient, or one total for integer commands.
enum OracleSide {
    Integer(Count),
    Series(Vec<Count>),
}

fn oracle_recompute(
    cmd: &BaseCommand,
    max_len: usize,
    budget: u64,
) -> Result<(OracleSide, usize), Failure> {
    match cmd {
        BaseCommand::Carlitz(args) => {
            let counts = parse_counts(&args.counts)?;
            let spec = MultisetSpec::from_counts(&counts);
            let pat = VincularPattern::single(2);
            let value = count_arrangements(&spec, budget, |w| !contains_vincular(w, &pat))?;
            Ok((OracleSide::Integer(value), spec.total()))
        }
        BaseCommand::RunLimited(args) => {
            let spec = parse_spec(&args.spec)?;
            let value = count_arrangements(&spec, budget, |w| respects_run_caps(w, &spec))?;
            Ok((OracleSide::Integer(value), spec.total()))
        }
        BaseCommand::Avoid(args) => {
            let pattern = parse_pattern(&args.pattern)?;
            let top = args.order.min(max_len);
            let counts = (0..=top)
                .map(|n| count_avoiding_words(args.k, &pattern, n, budget))
                .collect::<Result<_, _>>()?;
            Ok((OracleSide::Series(counts), top))
        }
        BaseCommand::CyclicAvoid(args) => {
            let pattern = VincularPattern::uniform(args.m, args.blocks);
            let top = args.order.min(max_len);
            let counts = (0..=top)
                .map(|n| count_cyclic_avoiding_words(args.k, &pattern, n, budget))
                .collect::<Result<_, _>>()?;
            Ok((OracleSide::Series(counts), top))
        }
        BaseCommand::CyclicRunLimited(args) => {
            let counts = parse_counts(&args.counts)?;
            let spec = MultisetSpec::from_counts(&counts);
            let pat = VincularPattern::single(args.m);
            let value = count_arrangements(&spec, budget, |w| cyclically_avoids(w, &pat))?;
            Ok((OracleSide::Integer(value), spec.total()))
        }
        BaseCommand::SubwordAvoid(args) => {
            let (spec, ids) = parse_letter_multiset(&args.letters);
            let forbidden: Vec<Letter> = args
                .forbidden
                .chars()
                .map(|c| {
                    ids.get(&c).copied().ok_or_else(|| {
                        Failure::Usage(format!("forbidden letter {c:?} is not available"))
                    })
                })
                .collect::<Result<_, _>>()?;
            let value = brute_force_subword_avoiders(&spec, &forbidden, budget)?;
            Ok((OracleSide::Integer(value), spec.total()))
        }
        BaseCommand::CyclicCarlitzCompositions(args) => {
            let top = args.order.min(max_len);
            let needed: u128 = (0..=top as u32).map(|n| 2u128.pow(n.saturating_sub(1))).sum();
            if needed > budget as u128 {
                return Err(Error::BudgetExceeded {
                    needed,
                    budget: budget as u128,
                }
                .into());
            }
            let counts = (0..=top)
                .map(|n| {
                    Count::from(
                        compositions(n)
                            .iter()
                            .filter(|c| !c.is_empty())
                            .filter(|c| {
                                let word = Word(c.iter().map(|&p| p as Letter).collect());
                                c.len() == 1
                                    || cyclically_avoids(&word, &VincularPattern::single(2))
                            })
                            .count(),
                    )
                })
                .collect();
            Ok((OracleSide::Series(counts), top))
        }
    }
}

/// Counts words drawing each letter at most its multiplicity, the empty
/// word included, containing no contiguous occurrence of `forbidden`.
fn brute_force_subword_avoiders(
    spec: &MultisetSpec,
    forbidden: &[Letter],
    budget: u64,
) -> Result<Count, Failure> {
    fn visit(
        letters: &[Letter],
        remaining: &mut [usize],
        current: &mut Vec<Letter>,
        forbidden: &[Letter],
        visited: &mut u64,
        budget: u64,
        acc: &mut Count,
    ) -> Result<(), Failure> {
        *visited += 1;
        if *visited > budget {
            return Err(Error::BudgetExceeded {
                needed: *visited as u128,
                budget: budget as u128,
            }
            .into());
        }
        if current.ends_with(forbidden) {
            return Ok(());
        }
        *acc += 1;
        for i in 0..letters.len() {
            if remaining[i] > 0 {
                remaining[i] -= 1;
                current.push(letters[i]);
                visit(letters, remaining, current, forbidden, visited, budget, acc)?;
                current.pop();
                remaining[i] += 1;
            }
        }
        Ok(())
    }
    let letters: Vec<Letter> = spec.entries().iter().map(|e| e.letter).collect();
    let mut remaining: Vec<usize> = spec.entries().iter().map(|e| e.count).collect();
    let mut acc = Count::from(0u32);
    let mut visited = 0;
    visit(
        &letters,
        &mut remaining,
        &mut Vec::new(),
        forbidden,
        &mut visited,
        budget,
        &mut acc,
    )?;
    Ok(acc)
}

fn run_verify(args: &VerifyArgs, json: bool) -> Result<QueryResult, Failure> {
    let budget = oracle_budget()?;
    let mut result = run_base(&args.command)?;
    let (oracle, verified_to) = oracle_recompute(&args.command, args.oracle_max_len, budget)?;
    let mut mismatches = Vec::new();
    match &oracle {
        OracleSide::Integer(want) => {
            let got = &result.values[0];
            let ok = got == &want.to_string();
            if !json {
                println!(
                    "total: formula {got} oracle {want} {}",
                    if ok { "ok" } else { "MISMATCH" }
                );
            }
            if !ok {
                mismatches.push(format!("total: formula {got}, oracle {want}"));
            }
        }
        OracleSide::Series(wants) => {
            for (n, want) in wants.iter().enumerate() {
                let got = &result.values[n];
                let ok = got == &want.to_string();
                if !json {
                    println!(
                        "x^{n}: formula {got} oracle {want} {}",
                        if ok { "ok" } else { "MISMATCH" }
                    );
                }
                if !ok {
                    mismatches.push(format!("x^{n}: formula {got}, oracle {want}"));
                }
            }
        }
    }
    if !mismatches.is_empty() {
        return Err(Failure::Internal(format!(
            "verification failed: {}",
            mismatches.join("; ")
        )));
    }
    result.verified_to = Some(verified_to);
    Ok(result)
}

fn execute(cli: &Cli) -> Result<(), Failure> {
    let result = match &cli.command {
        Command::Base(base) => run_base(base)?,
        Command::Verify(args) => run_verify(args, cli.json)?,
    };
    if cli.json {
        let rendered = serde_json::to_string(&result)
            .map_err(|e| Failure::Internal(format!("serialization failed: {e}")))?;
        println!("{rendered}");
    } else {
        println!("{}", result.values.join(","));
        if let Some(l) = result.verified_to {
            println!("verified to length {l}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| execute(&cli)));
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(failure)) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
        Err(_) => {
            eprintln!("error: internal invariant violated");
            ExitCode::from(1)
        }
    }
}
