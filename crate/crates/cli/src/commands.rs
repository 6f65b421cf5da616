use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;

use selfdesc::bijections::{
    decode_ballot_m, encode_ballot, encode_ballot_m, enumerate_m_increase, enumerate_unit_increase, west_tree_labels,
    west_tree_labels_m,
};
use selfdesc::census::{self, map_ranges, CensusConfig};
use selfdesc::combinatorics::{catalan, fuss_catalan, name_distribution_closed, unit_increase_count_closed};
use selfdesc::dynamics::{self, Endomorphism};
use selfdesc::enumerate::{generation_size, Odometer};
use selfdesc::family::{enumerate_family, name_distribution};
use selfdesc::sequence::{delta_into, gamma_into, Term};
use selfdesc::verify::{self, Level, DOUBLE_POINT_COUNTS};
use selfdesc::{BallotWord, BigCount, MIncreaseSequence, RawSequence, Sequence, UnitIncreaseSequence};

use crate::output::{OutputFormat, Table, Value};
use crate::{Cli, CliError, Command, CountKind, Direction, EnumerateKind, Fault, VerifyLevel};

type CmdResult = Result<(), CliError>;

const FILTER_BLOCK: u128 = 1 << 14;

pub fn run(cli: Cli) -> CmdResult {
    let config = CensusConfig {
        cap: cli.cap,
        workers: cli.workers.map_or_else(census::default_workers, |w| w as usize),
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Transform { endo, seq } => transform(&mut out, &endo, &seq),
        Command::Orbit { endo, seq, max_steps } => orbit(&mut out, &endo, &seq, max_steps),
        Command::Enumerate { kind, n, m } => enumerate(&mut out, &config, cli.format, kind, n, m),
        Command::Count { kind, range, m } => count(
            &mut out,
            &config,
            cli.format.unwrap_or(OutputFormat::JsonLines),
            kind,
            &range,
            m,
        ),
        Command::Verify { level, inject_fault } => verify_cmd(&mut out, &config, cli.format, level, inject_fault),
        Command::Biject { direction, input, m } => biject(&mut out, direction, &input, m),
    };
    out.flush()?;
    result
}

fn parse_a(text: &str) -> Result<Sequence, CliError> {
    let raw: RawSequence = text.parse()?;
    Ok(Sequence::try_from(raw)?)
}

fn transform(out: &mut impl Write, endo: &str, seq: &str) -> CmdResult {
    let endo: Endomorphism = endo.parse()?;
    let raw: RawSequence = seq.parse()?;
    let image = match endo {
        Endomorphism::Delta => selfdesc::delta(&raw),
        Endomorphism::DeltaFast => selfdesc::delta_fast(&raw),
        Endomorphism::Gamma | Endomorphism::Mu => endo.apply(&Sequence::try_from(raw)?),
    };
    writeln!(out, "{image}")?;
    Ok(())
}

fn orbit(out: &mut impl Write, endo: &str, seq: &str, max_steps: Option<usize>) -> CmdResult {
    let endo: Endomorphism = endo.parse()?;
    let start = parse_a(seq)?;
    let budget = max_steps.unwrap_or_else(|| endo.default_budget(start.len() - 1));
    let trace = dynamics::orbit(&start, endo, budget)?;
    for s in &trace.visited {
        writeln!(out, "{s}")?;
    }
    writeln!(out, "steps={} period={}", trace.steps_to_cycle, trace.period)?;
    Ok(())
}

fn require_m(m: Option<u32>) -> Result<u32, CliError> {
    match m {
        Some(0) => Err(CliError::new(CliError::PARSE, "--m must be at least 1")),
        Some(m) => Ok(m),
        None => Err(CliError::new(CliError::PARSE, "--m is required for this kind")),
    }
}

fn reject_m(m: Option<u32>) -> CmdResult {
    match m {
        Some(_) => Err(CliError::new(CliError::PARSE, "--m only applies to m-increase kinds")),
        None => Ok(()),
    }
}

/// Writes enumerated sequences as plain lines or through a [`Table`].
struct SequenceSink<W: Write> {
    n: usize,
    plain: Option<W>,
    table: Option<Table<W>>,
    index: u64,
}

impl<W: Write> SequenceSink<W> {
    fn new(out: W, format: Option<OutputFormat>, n: usize) -> Self {
        match format {
            None => SequenceSink {
                n,
                plain: Some(out),
                table: None,
                index: 0,
            },
            Some(f) => SequenceSink {
                n,
                plain: None,
                table: Some(Table::new(out, f, vec!["n", "index", "seq"], "seq")),
                index: 0,
            },
        }
    }

    fn emit(&mut self, seq: &dyn std::fmt::Display) -> io::Result<()> {
        let index = self.index;
        self.index += 1;
        if let Some(out) = self.plain.as_mut() {
            return writeln!(out, "{seq}");
        }
        let table = self.table.as_mut().expect("one sink is set");
        table.row(
            Some(index),
            &[
                Some(Value::Int(self.n as u64)),
                Some(Value::Int(index)),
                Some(Value::Text(seq.to_string())),
            ],
        )
    }

    fn finish(self) -> io::Result<()> {
        match (self.plain, self.table) {
            (Some(mut out), _) => out.flush(),
            (_, Some(table)) => table.finish(),
            _ => Ok(()),
        }
    }
}

struct Terms<'a>(&'a [Term]);

impl std::fmt::Display for Terms<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Emits, in lexicographic order, the sequences of 𝒜ₙ matching `keep`.
///
/// Blocks are filtered a window at a time, in parallel when several
/// workers are configured, and each window is written in block order, so
/// memory stays bounded and the output matches the sequential order.
fn stream_filtered<W, F>(sink: &mut SequenceSink<W>, config: &CensusConfig, n: usize, keep: F) -> CmdResult
where
    W: Write,
    F: Fn(&[Term], &mut census::Scratch) -> bool + Sync,
{
    let total = generation_size(n);
    let window = (config.workers * 4) as u128;
    let mut start = 0u128;
    while start < total {
        let blocks: Vec<_> = (0..window)
            .map(|k| start + k * FILTER_BLOCK)
            .take_while(|&b| b < total)
            .map(|b| b..(b + FILTER_BLOCK).min(total))
            .collect();
        start = blocks.last().map_or(total, |b| b.end);
        let found = map_ranges(blocks, config.workers, |block| {
            let mut scratch = census::Scratch::default();
            let mut odometer = Odometer::range(n, block);
            let mut hits = Vec::new();
            while let Some(terms) = odometer.advance() {
                if keep(terms, &mut scratch) {
                    hits.push(terms.to_vec());
                }
            }
            hits
        });
        for terms in found.iter().flatten() {
            sink.emit(&Terms(terms))?;
        }
    }
    Ok(())
}

fn enumerate(
    out: &mut impl Write,
    config: &CensusConfig,
    format: Option<OutputFormat>,
    kind: EnumerateKind,
    n: usize,
    m: Option<u32>,
) -> CmdResult {
    config.check(n)?;
    let m = match kind {
        EnumerateKind::MIncrease => Some(require_m(m)?),
        _ => {
            reject_m(m)?;
            None
        }
    };
    let mut sink = SequenceSink::new(out, format, n);
    match kind {
        EnumerateKind::All => {
            let mut odometer = Odometer::new(n);
            while let Some(terms) = odometer.advance() {
                sink.emit(&Terms(terms))?;
            }
        }
        EnumerateKind::Family => {
            for member in enumerate_family(n) {
                sink.emit(member.full_name())?;
            }
        }
        EnumerateKind::Fixed => stream_filtered(&mut sink, config, n, |terms, s| {
            delta_into(terms, &mut s.a);
            s.a == terms
        })?,
        EnumerateKind::Double => stream_filtered(&mut sink, config, n, |terms, s| {
            gamma_into(terms, &mut s.a);
            gamma_into(&s.a, &mut s.b);
            s.b == terms
        })?,
        EnumerateKind::UnitIncrease => {
            for a in enumerate_unit_increase(n) {
                sink.emit(&a)?;
            }
        }
        EnumerateKind::MIncrease => {
            for a in enumerate_m_increase(m.expect("checked"), n)? {
                sink.emit(&a)?;
            }
        }
    }
    sink.finish()?;
    Ok(())
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || {
        CliError::new(
            CliError::PARSE,
            format!("bad generation range {text:?}, expected n or a..b"),
        )
    };
    let number = |s: &str| -> Result<usize, CliError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse().map_err(|_| bad())
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (number(a)?, number(b)?);
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let n = number(text)?;
            Ok(n..=n)
        }
    }
}

fn big(v: u64) -> BigCount {
    BigCount::from(v)
}

fn count(
    out: &mut impl Write,
    config: &CensusConfig,
    format: OutputFormat,
    kind: CountKind,
    range: &str,
    m: Option<u32>,
) -> CmdResult {
    let range = parse_range(range)?;
    let m = match kind {
        CountKind::MIncrease | CountKind::FussCatalan => Some(require_m(m)?),
        _ => {
            reject_m(m)?;
            None
        }
    };
    let brute_force = !matches!(kind, CountKind::Catalan | CountKind::FussCatalan);
    if brute_force {
        config.check(*range.end())?;
    }

    let kind_name = kind_name(kind);
    let kind_cell = || Some(Value::Text(kind_name.to_string()));
    let mut mismatches = 0usize;
    let mut compared = |brute: &BigCount, closed: &BigCount| {
        let ok = brute == closed;
        if !ok {
            mismatches += 1;
        }
        Some(Value::Bool(ok))
    };

    match kind {
        CountKind::Fixed | CountKind::Family | CountKind::UnitIncrease => {
            let mut table = Table::new(out, format, vec!["kind", "n", "brute", "closed", "match"], "brute");
            for n in range {
                let brute = big(match kind {
                    CountKind::Fixed => dynamics::count_fixed_points_delta(n, config)?,
                    CountKind::Family => enumerate_family(n).count() as u64,
                    _ => enumerate_unit_increase(n).count() as u64,
                });
                let closed = catalan(n as u64 + 1);
                let flag = compared(&brute, &closed);
                table.row(
                    Some(n as u64),
                    &[
                        kind_cell(),
                        Some(Value::Int(n as u64)),
                        Some(Value::Big(brute)),
                        Some(Value::Big(closed)),
                        flag,
                    ],
                )?;
            }
            table.finish()?;
        }
        CountKind::Double => {
            let mut table = Table::new(out, format, vec!["kind", "n", "brute", "published", "match"], "brute");
            for n in range {
                let brute = big(dynamics::count_double_points_gamma(n, config)?);
                let published = DOUBLE_POINT_COUNTS.get(n).map(|&v| big(v));
                let flag = published.as_ref().and_then(|p| compared(&brute, p));
                table.row(
                    Some(n as u64),
                    &[
                        kind_cell(),
                        Some(Value::Int(n as u64)),
                        Some(Value::Big(brute)),
                        published.map(Value::Big),
                        flag,
                    ],
                )?;
            }
            table.finish()?;
        }
        CountKind::NameDist | CountKind::UnitDist => {
            let mut table = Table::new(out, format, vec!["kind", "n", "r", "brute", "closed", "match"], "brute");
            for n in range {
                let counts = if kind == CountKind::NameDist {
                    name_distribution(n).counts
                } else {
                    let mut counts = vec![0u64; n + 1];
                    for a in enumerate_unit_increase(n) {
                        counts[a.as_sequence().last() as usize] += 1;
                    }
                    counts
                };
                for (r, &c) in counts.iter().enumerate() {
                    let brute = big(c);
                    let closed = if kind == CountKind::NameDist {
                        name_distribution_closed(n as u64, r as u64)?
                    } else {
                        unit_increase_count_closed(n as u64, r as u64)?
                    };
                    let flag = compared(&brute, &closed);
                    table.row(
                        None,
                        &[
                            kind_cell(),
                            Some(Value::Int(n as u64)),
                            Some(Value::Int(r as u64)),
                            Some(Value::Big(brute)),
                            Some(Value::Big(closed)),
                            flag,
                        ],
                    )?;
                }
            }
            table.finish()?;
        }
        CountKind::MIncrease => {
            let m = m.expect("checked");
            let mut table = Table::new(out, format, vec!["kind", "m", "n", "brute", "closed", "match"], "brute");
            for n in range {
                let brute = big(enumerate_m_increase(m, n)?.count() as u64);
                let closed = fuss_catalan(u64::from(m), n as u64 + 1)?;
                let flag = compared(&brute, &closed);
                table.row(
                    Some(n as u64),
                    &[
                        kind_cell(),
                        Some(Value::Int(u64::from(m))),
                        Some(Value::Int(n as u64)),
                        Some(Value::Big(brute)),
                        Some(Value::Big(closed)),
                        flag,
                    ],
                )?;
            }
            table.finish()?;
        }
        CountKind::Catalan => {
            let mut table = Table::new(out, format, vec!["kind", "n", "closed"], "closed");
            for n in range {
                table.row(
                    Some(n as u64),
                    &[
                        kind_cell(),
                        Some(Value::Int(n as u64)),
                        Some(Value::Big(catalan(n as u64))),
                    ],
                )?;
            }
            table.finish()?;
        }
        CountKind::FussCatalan => {
            let m = m.expect("checked");
            let mut table = Table::new(out, format, vec!["kind", "m", "n", "closed"], "closed");
            for n in range {
                table.row(
                    Some(n as u64),
                    &[
                        kind_cell(),
                        Some(Value::Int(u64::from(m))),
                        Some(Value::Int(n as u64)),
                        Some(Value::Big(fuss_catalan(u64::from(m), n as u64)?)),
                    ],
                )?;
            }
            table.finish()?;
        }
    }

    if mismatches > 0 {
        return Err(CliError::new(
            CliError::VERIFY,
            format!("{mismatches} brute-force counts disagree with the closed form"),
        ));
    }
    Ok(())
}

fn kind_name(kind: CountKind) -> &'static str {
    match kind {
        CountKind::Fixed => "fixed",
        CountKind::Double => "double",
        CountKind::Family => "family",
        CountKind::NameDist => "name-dist",
        CountKind::UnitIncrease => "unit-increase",
        CountKind::UnitDist => "unit-dist",
        CountKind::MIncrease => "m-increase",
        CountKind::Catalan => "catalan",
        CountKind::FussCatalan => "fuss-catalan",
    }
}

fn verify_cmd(
    out: &mut impl Write,
    config: &CensusConfig,
    format: Option<OutputFormat>,
    level: VerifyLevel,
    fault: Option<Fault>,
) -> CmdResult {
    let level = match level {
        VerifyLevel::Quick => Level::Quick,
        VerifyLevel::Full => Level::Full,
    };
    let transforms: &dyn verify::Transforms = match fault {
        Some(Fault::Delta) => &verify::FaultyDelta,
        None => &verify::Library,
    };

    enum Sink<'a, W: Write> {
        Plain(&'a mut W),
        Table(Table<&'a mut W>),
    }
    let mut sink = match format {
        Some(f) => Sink::Table(Table::new(
            &mut *out,
            f,
            vec!["check", "passed", "detail", "seconds"],
            "passed",
        )),
        None => Sink::Plain(&mut *out),
    };
    let mut write_error: Option<io::Error> = None;
    let report = verify::run_with(level, config, transforms, |check| {
        if write_error.is_some() {
            return;
        }
        let written = match &mut sink {
            Sink::Table(t) => t.row(
                None,
                &[
                    Some(Value::Text(check.name.to_string())),
                    Some(Value::Bool(check.passed)),
                    Some(Value::Text(check.detail.clone())),
                    Some(Value::Text(format!("{:.3}", check.elapsed.as_secs_f64()))),
                ],
            ),
            Sink::Plain(w) => {
                let status = if check.passed { "PASS" } else { "FAIL" };
                writeln!(
                    w,
                    "{status} {} ({}; {:.2}s)",
                    check.name,
                    check.detail,
                    check.elapsed.as_secs_f64()
                )
                .and_then(|_| w.flush())
            }
        };
        if let Err(e) = written {
            write_error = Some(e);
        }
    });
    if let Some(e) = write_error {
        return Err(e.into());
    }
    if let Sink::Table(t) = sink {
        t.finish()?;
    }

    let failed = report.failures().count();
    let total = report.checks.len();
    if failed > 0 {
        return Err(CliError::new(
            CliError::VERIFY,
            format!("{failed} of {total} checks failed"),
        ));
    }
    if format.is_none() {
        writeln!(out, "all {total} checks passed")?;
    }
    Ok(())
}

fn biject(out: &mut impl Write, direction: Direction, input: &str, m: Option<u32>) -> CmdResult {
    let m = m.unwrap_or(1);
    if m == 0 {
        return Err(CliError::new(CliError::PARSE, "--m must be at least 1"));
    }
    match direction {
        Direction::Encode => {
            let word = if m == 1 {
                let a: UnitIncreaseSequence =
                    parse_a(input).and_then(|s| UnitIncreaseSequence::new(s).map_err(CliError::from))?;
                encode_ballot(&a)
            } else {
                encode_ballot_m(&MIncreaseSequence::parse(m, input)?)
            };
            writeln!(out, "{word}")?;
        }
        Direction::Decode => {
            let word: BallotWord = input.parse()?;
            writeln!(out, "{}", decode_ballot_m(&word)?)?;
        }
        Direction::West => {
            let labels = if m == 1 {
                let a: UnitIncreaseSequence =
                    parse_a(input).and_then(|s| UnitIncreaseSequence::new(s).map_err(CliError::from))?;
                west_tree_labels(&a)
            } else {
                west_tree_labels_m(&MIncreaseSequence::parse(m, input)?)
            };
            let text: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
            writeln!(out, "{}", text.join(","))?;
        }
    }
    Ok(())
}
