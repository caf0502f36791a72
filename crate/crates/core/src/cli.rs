//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a well-formed word that is maximal (`next`) or
//! not a Dyck word (`validate`), 2 bad arguments or unparseable input,
//! 3 I/O failure.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use dyck::analysis::first_violation;
use dyck::bitcore::{enumerate, DyckWord, HalfLength, ENUMERATION_WARN_THRESHOLD};
use dyck::{catalan_u64, oracle, render_grid, Error};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dyck",
    version,
    about = "Generate Dyck words in increasing order"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every Dyck word of half length n, smallest first.
    Enum {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        format: FormatArg,
        /// Stop after this many words.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Print the successor of a word; exits 1 with no output on the maximum.
    Next {
        word: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Print the n-th Catalan number.
    Count {
        #[arg(long)]
        n: u32,
    },
    /// Check whether a word is a Dyck word.
    Validate {
        word: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Draw every lattice path of half length n as an SVG sheet.
    Render {
        #[arg(long)]
        n: u32,
        /// Output file; standard output if omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Brute-force listing, for debugging.
    #[command(hide = true)]
    Oracle {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Debug, Args)]
struct FormatArg {
    /// bits, parens, int, or custom:<one><zero>
    #[arg(long, default_value = "bits")]
    format: WordFormat,
}

/// How words are spelled on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordFormat {
    Bits,
    Parens,
    Int,
    Custom { one: char, zero: char },
}

impl WordFormat {
    fn symbols(self) -> Option<(char, char)> {
        match self {
            WordFormat::Bits => Some(('1', '0')),
            WordFormat::Parens => Some(('(', ')')),
            WordFormat::Custom { one, zero } => Some((one, zero)),
            WordFormat::Int => None,
        }
    }

    /// Spells the low `2n` bits of `value` MSB-first, or prints it in decimal.
    pub fn render(self, word: DyckWord<u64>) -> String {
        match self.symbols() {
            None => word.value().to_string(),
            Some((one, zero)) => word.bits().map(|b| if b { one } else { zero }).collect(),
        }
    }

    /// Reads a word into its symbols (`true` for one). Fails only on text
    /// that is not spelled in this format at all.
    pub fn parse_symbols(self, text: &str) -> Result<Vec<bool>, String> {
        match self.symbols() {
            None => {
                let value: u64 = text
                    .parse()
                    .map_err(|e| format!("cannot read {text:?} as an unsigned integer: {e}"))?;
                if value == 0 {
                    return Ok(vec![false]);
                }
                let len = u64::BITS - value.leading_zeros();
                Ok((0..len).rev().map(|s| (value >> s) & 1 == 1).collect())
            }
            Some((one, zero)) => text
                .chars()
                .enumerate()
                .map(|(i, c)| {
                    if c == one {
                        Ok(true)
                    } else if c == zero {
                        Ok(false)
                    } else {
                        Err(format!("unexpected symbol {c:?} at position {}", i + 1))
                    }
                })
                .collect(),
        }
    }
}

impl FromStr for WordFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bits" => Ok(WordFormat::Bits),
            "parens" => Ok(WordFormat::Parens),
            "int" => Ok(WordFormat::Int),
            _ => {
                let spec = s
                    .strip_prefix("custom:")
                    .ok_or_else(|| format!("unknown format {s:?}"))?;
                let mut chars = spec.chars();
                match (chars.next(), chars.next(), chars.next()) {
                    (Some(one), Some(zero), None) if one != zero => {
                        Ok(WordFormat::Custom { one, zero })
                    }
                    (Some(_), Some(_), None) => Err("custom symbols must differ".into()),
                    _ => Err("custom format takes exactly two symbols, as in custom:ab".into()),
                }
            }
        }
    }
}

impl fmt::Display for WordFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordFormat::Bits => f.write_str("bits"),
            WordFormat::Parens => f.write_str("parens"),
            WordFormat::Int => f.write_str("int"),
            WordFormat::Custom { one, zero } => write!(f, "custom:{one}{zero}"),
        }
    }
}

/// A failed command: the exit code and what to print on standard error.
struct Failure {
    code: u8,
    message: Option<String>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: Some(message.into()),
        }
    }

    fn negative(message: Option<String>) -> Self {
        Self {
            code: EXIT_NEGATIVE,
            message,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self {
            code: EXIT_IO,
            message: Some(e.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(e) => e.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

pub fn run(cli: Cli) -> ExitCode {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = dispatch(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::from(EXIT_OK),
        // A closed pipe (`dyck enum … | head`) is not an error.
        Err(Failure { code: EXIT_IO, .. }) if stdout_closed(&mut out) => ExitCode::from(EXIT_OK),
        Err(Failure { code, message }) => {
            if let Some(message) = message {
                eprintln!("dyck: {message}");
            }
            ExitCode::from(code)
        }
    }
}

fn stdout_closed(out: &mut impl Write) -> bool {
    matches!(out.flush(), Err(e) if e.kind() == io::ErrorKind::BrokenPipe)
}

fn half_length(n: u32) -> Result<HalfLength, Failure> {
    HalfLength::new(n).map_err(Failure::from)
}

fn parse_word(text: &str, format: WordFormat) -> Result<DyckWord<u64>, Failure> {
    let symbols = format.parse_symbols(text).map_err(Failure::usage)?;
    if let Some(v) = first_violation(symbols.iter().copied()) {
        return Err(Failure::usage(format!("{text:?} is not a Dyck word: {v}")));
    }
    let n = u32::try_from(symbols.len() / 2).unwrap_or(u32::MAX);
    let n = HalfLength::new(n).map_err(|_| {
        Failure::usage(format!(
            "{text:?} is longer than {} symbols",
            2 * HalfLength::MAX
        ))
    })?;
    let value = symbols
        .iter()
        .fold(0u64, |acc, &b| (acc << 1) | u64::from(b));
    Ok(DyckWord::new(value, n)?)
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Enum { n, format, limit } => {
            let n = half_length(n)?;
            if n.get() > ENUMERATION_WARN_THRESHOLD && limit.is_none() {
                eprintln!("dyck: warning: enumerating half length {n} will not finish in practice");
            }
            let limit = limit.unwrap_or(u64::MAX);
            for word in enumerate::<u64>(n)?.take(usize::try_from(limit).unwrap_or(usize::MAX)) {
                writeln!(out, "{}", format.format.render(word))?;
            }
        }
        Command::Next { word, format } => {
            let w = parse_word(&word, format.format)?;
            match w.next() {
                Some(s) => writeln!(out, "{}", format.format.render(s))?,
                None => return Err(Failure::negative(None)),
            }
        }
        Command::Count { n } => {
            writeln!(out, "{}", catalan_u64(n)?)?;
        }
        Command::Validate { word, format } => {
            let symbols = format.format.parse_symbols(&word).map_err(Failure::usage)?;
            if let Some(v) = first_violation(symbols) {
                return Err(Failure::negative(Some(v.to_string())));
            }
        }
        Command::Render { n, output } => {
            let n = half_length(n)?;
            let drawn = match output {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| {
                        Failure::from(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
                    })?;
                    let mut file = BufWriter::new(file);
                    let drawn = render_grid(n, &mut file)?;
                    file.flush()?;
                    drawn
                }
                None => render_grid(n, out)?,
            };
            eprintln!("{drawn} tiles");
        }
        Command::Oracle { n, format } => {
            let n = half_length(n)?;
            for value in oracle::brute_force_all(n)? {
                writeln!(out, "{}", format.format.render(DyckWord::new(value, n)?))?;
            }
        }
    }
    Ok(())
}
