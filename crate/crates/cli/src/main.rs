use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pi_core::coxeter::{nf, parse_letters, step, word_to_perm, Letters, Word};
use pi_core::frontend::{parse_qasm, qasm_to_pi, PermFile};
use pi_core::lehmer::{decode, encode, perm_to_word, LehmerCode};
use pi_core::pipeline::{equiv, interp, norm1, synth, synth_at, Equivalence};
use pi_core::semantics::{bits, eval_value};
use pi_core::syntax::{parse_program, parse_type, parse_value, print_comb, print_definition, Comb, PiType};
use pi_core::{Permutation, Value};

/// Evaluate, normalize, compare and synthesize reversible programs.
#[derive(Parser)]
#[command(name = "pi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Type-check a program file and print its definitions.
    Parse { file: PathBuf },
    /// Run a program on one input.
    Eval {
        /// A `.pi` or `.qasm` file, optionally `FILE#NAME`.
        program: String,
        /// A bit string such as `011`, or a value such as `(inl tt, inr tt)`.
        #[arg(long)]
        input: String,
    },
    /// Print the normal form of a program with its word and Lehmer code.
    Norm { program: String },
    /// Decide whether two programs compute the same permutation.
    Equiv { left: String, right: String },
    /// Build a program definition from a permutation file.
    Synth {
        perm: PathBuf,
        /// Act on this type instead of `1 + (1 + ... + 0)`.
        #[arg(long = "type")]
        ty: Option<String>,
        /// Read the table as bit patterns of `B n` rather than as indices.
        #[arg(long)]
        bits: bool,
        #[arg(long, default_value = "synth")]
        name: String,
    },
    /// Normalize a word such as `n=2 [1,0,1,1,1]`.
    Word {
        file: PathBuf,
        /// Print each rewriting step.
        #[arg(long)]
        steps: bool,
    },
    /// Convert between a table `[..]`, a Lehmer code `(..)`, a word
    /// `n=.. [..]` and a permutation file, given inline or as a file.
    Lehmer { input: String },
    /// Translate a qasm circuit into a program.
    ImportQasm {
        file: PathBuf,
        #[arg(long, default_value = "circuit")]
        name: String,
    },
}

type Failure = String;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// Loads `FILE` or `FILE#NAME`; without a name, the last definition.
fn load(reference: &str) -> Result<Comb, Failure> {
    let (file, name) = match reference.rsplit_once('#') {
        Some((f, n)) => (f, Some(n)),
        None => (reference, None),
    };
    let path = Path::new(file);
    let text = read(path)?;
    if path.extension().is_some_and(|e| e == "qasm") {
        let circ = parse_qasm(&text).map_err(|e| format!("{file}: {e}"))?;
        return Ok(qasm_to_pi(&circ));
    }
    let defs = parse_program(&text).map_err(|e| format!("{file}:{e}"))?;
    let found = match name {
        Some(n) => defs.into_iter().find(|d| d.name == n),
        None => defs.into_iter().last(),
    };
    found.map(|d| d.comb).ok_or_else(|| format!("{reference}: no such definition"))
}

fn input_value(input: &str, ty: &PiType) -> Result<Value, Failure> {
    if let (Some(n), Some(v)) = (ty.bit_width(), bits::parse(input.trim())) {
        if input.trim().len() == n {
            return Ok(v);
        }
    }
    parse_value(input).map_err(|e| format!("input: {e}"))
}

fn describe(p: &Permutation) -> String {
    let w = perm_to_word(p);
    format!("word: {}\nlehmer: {}", Letters(w.letters()), encode(p))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Parse { file } => {
            let text = read(&file)?;
            let defs = parse_program(&text).map_err(|e| format!("{}:{e}", file.display()))?;
            for d in defs {
                println!("{}", print_definition(&d.name, &d.comb));
            }
        }
        Command::Eval { program, input } => {
            let c = load(&program)?;
            let ty = c.source();
            let v = input_value(&input, &ty)?;
            let out = eval_value(&c, &v).map_err(|e| e.to_string())?;
            println!("{out}");
            if let Some(n) = c.target().bit_width() {
                println!("{}", bits::render(n, bits::from_value(n, &out).expect("value of B n")));
            }
        }
        Command::Norm { program } => {
            let c = load(&program)?;
            let p = interp(&c).map_err(|e| e.to_string())?;
            let n = norm1(&c).map_err(|e| e.to_string())?;
            println!("{}", print_comb(&n.to_comb()));
            println!("{}", describe(&p));
        }
        Command::Equiv { left, right } => {
            let (a, b) = (load(&left)?, load(&right)?);
            return match equiv(&a, &b).map_err(|e| e.to_string())? {
                Equivalence::Equivalent { normal_form } => {
                    println!("equivalent");
                    println!("{}", print_comb(&normal_form.to_comb()));
                    Ok(ExitCode::SUCCESS)
                }
                Equivalence::Inequivalent { witness } => {
                    println!("inequivalent: the programs differ on input index {witness}");
                    Ok(ExitCode::from(1))
                }
            };
        }
        Command::Synth { perm, ty, bits: as_bits, name } => {
            let file = PermFile::from_json(&read(&perm)?).map_err(|e| format!("{}: {e}", perm.display()))?;
            let p = if as_bits {
                if !file.n.is_power_of_two() || file.n < 2 {
                    return Err(format!("--bits needs a table of 2^n entries, got {}", file.n));
                }
                let table = file.to_permutation().map_err(|e| e.to_string())?.table().to_vec();
                bits::perm_from_table(table).map_err(|e| e.to_string())?
            } else {
                file.to_permutation().map_err(|e| e.to_string())?
            };
            let ty = match (ty, as_bits) {
                (Some(t), _) => Some(parse_type(&t).map_err(|e| format!("--type: {e}"))?),
                (None, true) => Some(PiType::bits(p.len().trailing_zeros() as usize)),
                (None, false) => None,
            };
            let c = match ty {
                Some(t) => synth_at(&p, &t).map_err(|e| e.to_string())?,
                None => synth(&p).to_comb(),
            };
            println!("{}", print_definition(&name, &c));
        }
        Command::Word { file, steps } => {
            let w: Word = read(&file)?.trim().parse().map_err(|e| format!("{}: {e}", file.display()))?;
            if steps {
                let mut cur = w.clone();
                while let Some(s) = step(&cur) {
                    println!("{} --{}@{}--> {}", Letters(s.before.letters()), s.rule, s.position, Letters(s.after.letters()));
                    cur = s.after;
                }
            }
            println!("{}", Letters(nf(&w).letters()));
        }
        Command::Lehmer { input } => {
            let text = if Path::new(&input).is_file() { read(Path::new(&input))? } else { input };
            let text = text.trim();
            let p = if text.starts_with('{') {
                PermFile::from_json(text).and_then(|f| f.to_permutation()).map_err(|e| e.to_string())?
            } else if text.starts_with('[') {
                let table = parse_letters(text).ok_or_else(|| format!("malformed table `{text}`"))?;
                Permutation::from_table(table).map_err(|e| e.to_string())?
            } else if text.starts_with('(') {
                decode(&text.parse::<LehmerCode>().map_err(|e| e.to_string())?)
            } else if text.starts_with("n=") {
                let w: Word = text.parse().map_err(|e: pi_core::coxeter::WordError| e.to_string())?;
                word_to_perm(&w)
            } else {
                return Err(format!("unrecognized input `{text}`"));
            };
            println!("table: {p}");
            println!("{}", describe(&p));
        }
        Command::ImportQasm { file, name } => {
            let circ = parse_qasm(&read(&file)?).map_err(|e| format!("{}: {e}", file.display()))?;
            println!("{}", print_definition(&name, &qasm_to_pi(&circ)));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
