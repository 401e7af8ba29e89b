use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shifted_hecke::grothendieck::{conjecture_scan, star_symmetry_check, verify_expansion, Conjecture};
use shifted_hecke::insertion::{insertion, reconstruct_word, semistandard_record, InsertionMode};
use shifted_hecke::json::{insertion_trace, TableauJson};
use shifted_hecke::words::{atoms, congruence_class, enumerate_words_with, Caps, Relation, WordMode};
use shifted_hecke::{Error, FpfInvolution, Involution, Permutation, Word};

#[derive(Parser)]
#[command(name = "shecke", version, about = "Symplectic and orthogonal Hecke insertion on shifted tableaux")]
struct Cli {
    /// Print tableaux and word lists as plain text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InsMode {
    Sp,
    O,
}

impl From<InsMode> for InsertionMode {
    fn from(m: InsMode) -> InsertionMode {
        match m {
            InsMode::Sp => InsertionMode::Sp,
            InsMode::O => InsertionMode::O,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Sp,
    O,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a word and print P and Q.
    Insert {
        #[arg(long, value_enum)]
        mode: InsMode,
        /// Comma-separated letters, e.g. 6,2,2,4.
        #[arg(long)]
        word: String,
        /// Weakly increasing factorization; adds Q(w, i) to the output.
        #[arg(long)]
        factorization: Option<String>,
        /// Include every transition of the walk. In o mode the trace is of
        /// the doubled word.
        #[arg(long)]
        trace: bool,
    },
    /// Recover the word from P and Q given as tableau JSON files.
    Uninsert {
        #[arg(long, value_enum)]
        mode: InsMode,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// Enumerate the words of a family up to a length.
    Words {
        #[arg(long, value_enum)]
        mode: Family,
        /// One-line notation, comma-separated.
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Keep only words of minimal length.
        #[arg(long)]
        reduced: bool,
    },
    /// Atoms (or Hecke atoms) of an involution or FPF involution.
    Atoms {
        #[arg(long, value_enum)]
        mode: Family,
        #[arg(long)]
        target: String,
        #[arg(long)]
        hecke: bool,
    },
    /// Congruence class of a word under a relation.
    Classes {
        /// e.g. sp-kknuth, o-ck, braid.
        #[arg(long)]
        rel: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 8)]
        len_cap: usize,
        #[arg(long, default_value_t = 9)]
        alpha_cap: u32,
    },
    /// Expansion coefficients and the truncated-series check.
    Expand {
        #[arg(long, value_enum)]
        mode: Family,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 6)]
        deg: usize,
    },
    /// Expansion check plus star symmetry for one target.
    Verify {
        #[arg(long, value_enum)]
        mode: Family,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 6)]
        deg: usize,
    },
    /// Search for a counterexample to a conjectured class invariance.
    Scan {
        #[arg(long, value_enum)]
        conjecture: InsMode,
        #[arg(long, default_value_t = 8)]
        len_cap: usize,
        #[arg(long, default_value_t = 9)]
        alpha_cap: u32,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

/// What to print and whether the run found a violation (exit code 4).
struct Output {
    json: Value,
    text: String,
    violation: bool,
}

impl Output {
    fn plain(json: Value, text: String) -> Output {
        Output { json, text, violation: false }
    }
}

fn word_mode(family: Family, target: &str) -> Result<WordMode, Error> {
    Ok(match family {
        Family::Sp => WordMode::Symplectic(target.parse::<FpfInvolution>()?),
        Family::O => WordMode::Orthogonal(target.parse::<Involution>()?),
        Family::Plain => WordMode::Plain(target.parse::<Permutation>()?),
    })
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn word_lines<'a>(words: impl IntoIterator<Item = &'a Word>) -> String {
    words
        .into_iter()
        .map(|w| w.letters().iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("\n")
}

fn read_tableau(path: &str) -> Result<TableauJson, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::Lib(Error::Malformed(format!("{path}: {e}"))))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Insert { mode, word, factorization, trace } => {
            let w: Word = word.parse()?;
            let i: Option<Word> = factorization.as_deref().map(str::parse).transpose()?;
            let mode = InsertionMode::from(mode);
            let ins = insertion(&w, mode)?;
            let mut out = json!({
                "mode": mode,
                "word": w,
                "p": TableauJson::from_tableau(&ins.p)?,
                "q": TableauJson::from_setvalued(&ins.q)?,
            });
            let mut text = format!("P:\n{}\nQ:\n{}", ins.p, ins.q);
            if let Some(i) = i {
                let (_, qi) = semistandard_record(&w, &i, mode)?;
                out["q_factorization"] = to_json(&TableauJson::from_setvalued(&qi)?);
                text.push_str(&format!("\nQ(w, i):\n{qi}"));
            }
            if trace {
                let walked: Vec<u32> = match mode {
                    InsertionMode::Sp => w.to_vec(),
                    InsertionMode::O => w.doubled().to_vec(),
                };
                out["trace"] = to_json(&insertion_trace(&walked)?);
            }
            Ok(Output::plain(out, text))
        }
        Command::Uninsert { mode, p, q } => {
            let p = read_tableau(&p)?.to_tableau()?;
            let q = read_tableau(&q)?.to_setvalued()?;
            let w = reconstruct_word(&p, &q, mode.into())?;
            let text = word_lines([&w]);
            Ok(Output::plain(to_json(&w), text))
        }
        Command::Words { mode, target, max_len, reduced } => {
            let mode = word_mode(mode, &target)?;
            let mut words = enumerate_words_with(&mode, max_len, None, &Caps::default())?;
            if reduced {
                words.retain(|u| u.len() == mode.min_length());
            }
            Ok(Output::plain(to_json(&words), word_lines(&words)))
        }
        Command::Atoms { mode, target, hecke } => {
            if matches!(mode, Family::Plain) {
                return Err(Error::Malformed("atoms are defined for --mode o or sp".into()).into());
            }
            let set = atoms(&word_mode(mode, &target)?, hecke)?;
            let text = set.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n");
            Ok(Output::plain(to_json(&set), text))
        }
        Command::Classes { rel, word, len_cap, alpha_cap } => {
            let rel: Relation = rel.parse()?;
            let w: Word = word.parse()?;
            let class = congruence_class(&w, rel, len_cap, alpha_cap)?;
            Ok(Output::plain(to_json(&class), word_lines(&class)))
        }
        Command::Expand { mode, target, vars, deg } => {
            let report = verify_expansion(&word_mode(mode, &target)?, vars, deg)?;
            let mut text = format!("verified: {}\n", report.verified);
            for (parts, c) in &report.coefficients {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                text.push_str(&format!("{}: {c}\n", parts.join(",")));
            }
            if !report.verified {
                text.push_str(&format!("residual: {}\n", report.residual));
            }
            Ok(Output { violation: !report.verified, json: to_json(&report), text: text.trim_end().into() })
        }
        Command::Verify { mode, target, vars, deg } => {
            let mode = word_mode(mode, &target)?;
            let expansion = verify_expansion(&mode, vars, deg)?.verified;
            let star = match mode {
                WordMode::Plain(_) => None,
                _ => Some(star_symmetry_check(&mode, vars, deg)?),
            };
            let json = json!({
                "mode": mode.name(),
                "target": mode.target_oneline(),
                "expansion": expansion,
                "star_symmetry": star,
            });
            let star_text = star.map_or("n/a".to_string(), |s| s.to_string());
            let text = format!("expansion: {expansion}\nstar symmetry: {star_text}");
            Ok(Output { violation: !expansion || star == Some(false), json, text })
        }
        Command::Scan { conjecture, len_cap, alpha_cap } => {
            let which = match conjecture {
                InsMode::Sp => Conjecture::Sp,
                InsMode::O => Conjecture::O,
            };
            let r = conjecture_scan(which, len_cap, alpha_cap)?;
            let text = match &r.counterexample {
                Some((a, b)) => format!("counterexample: {a} ~ {b}"),
                None => format!("no counterexample among {} words in {} classes", r.words, r.classes),
            };
            Ok(Output { violation: r.counterexample.is_some(), json: to_json(&r), text })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match run(cli) {
        Ok(out) => {
            if pretty {
                println!("{}", out.text);
            } else {
                println!("{}", out.json);
            }
            ExitCode::from(if out.violation { 4 } else { 0 })
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::CapExceeded { .. }) { 3 } else { 2 })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
