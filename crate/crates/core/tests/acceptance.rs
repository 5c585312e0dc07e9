//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the report is printed in order.

use std::collections::{HashMap, HashSet, VecDeque};
use std::path::PathBuf;
use std::process::ExitCode;

use pi_core::coxeter::{is_normal, nf, nf_with, shortlex_lt, step, word_to_perm, Rule, Word};
use pi_core::frontend::{parse_qasm, qasm_to_pi, trace};
use pi_core::lehmer::{decode, decode_trace, em, encode, perm_to_word, LehmerCode};
use pi_core::pipeline::{equiv, interp, norm1, synth, Equivalence};
use pi_core::semantics::{bits, check_axiom2, denote_comb};
use pi_core::syntax::{parse_comb, parse_program, print_comb, AxiomFamily, Comb};
use pi_core::translate::{hat_to_word, word_to_hat};
use pi_core::Permutation;
use pi_oracle as oracle;
use rand::Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn word(degree: usize, letters: &[usize]) -> Word {
    Word::new(degree, letters.to_vec()).expect("valid word")
}

fn read(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../programs").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn definition(file: &str, name: &str) -> Result<Comb, String> {
    let defs = parse_program(&read(file)).map_err(|e| e.to_string())?;
    defs.into_iter().find(|d| d.name == name).map(|d| d.comb).ok_or_else(|| format!("no definition `{name}`"))
}

fn intro_rewriting() -> Outcome {
    let a = nf(&word(2, &[1, 0, 1, 1, 1]));
    let b = nf(&word(2, &[1, 0, 1]));
    ensure(a.letters() == [0, 1, 0], || format!("nf([1,0,1,1,1]) = {a}"))?;
    ensure(b.letters() == [0, 1, 0], || format!("nf([1,0,1]) = {b}"))?;
    let short = definition("intro.pi", "short")?;
    let long = definition("intro.pi", "long")?;
    let verdict = equiv(&short, &long).map_err(|e| e.to_string())?;
    ensure(verdict.holds(), || "intro programs reported inequivalent".into())
}

fn braid_example() -> Outcome {
    let s = step(&word(5, &[4, 3, 2, 1, 0, 4])).ok_or("no step taken")?;
    ensure(s.rule == Rule::Braid, || format!("rule {}", s.rule))?;
    ensure(s.after.letters() == [3, 4, 3, 2, 1, 0], || format!("result {}", s.after))
}

fn lehmer_worked_example() -> Outcome {
    let p = Permutation::from_table(vec![2, 1, 4, 0, 3]).unwrap();
    let code = LehmerCode::new(vec![0, 1, 2, 0, 2]).unwrap();
    ensure(encode(&p) == code, || format!("encode = {}", encode(&p)))?;
    ensure(decode(&code) == p, || format!("decode = {}", decode(&code)))?;
    let rows = decode_trace(&code);
    let expected = vec![vec![1, 0, 2, 3, 4], vec![2, 1, 0, 3, 4], vec![2, 1, 0, 3, 4], vec![2, 1, 4, 0, 3]];
    ensure(rows == expected, || format!("trace {rows:?}"))
}

fn em_correctness() -> Outcome {
    let small = em(&LehmerCode::new(vec![0, 1, 2]).unwrap());
    ensure(small.letters() == [0, 1, 0], || format!("em((0,1,2)) = {small}"))?;
    let w = em(&LehmerCode::new(vec![0, 1, 2, 0, 2]).unwrap());
    ensure(is_normal(w.letters()), || format!("{w} is not normal"))?;
    let p = word_to_perm(&w);
    ensure(p.table() == [2, 1, 4, 0, 3], || format!("word_to_perm = {p}"))
}

/// Checks that normal forms and permutations determine each other.
fn consistent(words: impl Iterator<Item = Word>) -> Outcome {
    let mut by_nf: HashMap<Vec<usize>, Permutation> = HashMap::new();
    let mut by_perm: HashMap<Permutation, Vec<usize>> = HashMap::new();
    for w in words {
        let n = nf(&w).letters().to_vec();
        let p = oracle::perm_of_word_naive(&w);
        if let Some(q) = by_nf.insert(n.clone(), p.clone()) {
            ensure(q == p, || format!("{w}: one normal form, two permutations"))?;
        }
        if let Some(m) = by_perm.insert(p, n.clone()) {
            ensure(m == n, || format!("{w}: one permutation, two normal forms"))?;
        }
    }
    Ok(())
}

fn normal_form_count(degree: usize) -> usize {
    let start = Word::empty(degree);
    let mut seen: HashSet<Word> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for s in 0..degree {
            let mut letters = v.letters().to_vec();
            letters.push(s);
            let next = nf(&word(degree, &letters));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

fn word_problem() -> Outcome {
    for n in 1..=3 {
        consistent(oracle::exhaustive_words(n, 6).map_err(|e| format!("{e:?}"))?)?;
    }
    let mut rng = oracle::rng(5);
    for n in 1..=6 {
        let words: Vec<Word> = (0..10_000)
            .map(|_| {
                let len = rng.gen_range(0..=20);
                oracle::random_word(&mut rng, n, len)
            })
            .collect();
        consistent(words.into_iter())?;
    }
    let (four, five) = (normal_form_count(4), normal_form_count(5));
    ensure(four == 120, || format!("{four} normal forms for n = 4"))?;
    ensure(five == 720, || format!("{five} normal forms for n = 5"))
}

fn termination_and_confluence() -> Outcome {
    let mut rng = oracle::rng(6);
    for i in 0..1_000 {
        let degree = rng.gen_range(1..=6);
        let len = rng.gen_range(0..=20);
        let w = oracle::random_word(&mut rng, degree, len);
        let canonical = nf(&w);
        ensure(nf(&canonical) == canonical, || format!("nf not idempotent on {w}"))?;
        for _ in 0..10 {
            let mut choices = oracle::rng(rng.gen());
            let mut decreasing = true;
            let result = nf_with(
                &w,
                |options| choices.gen_range(0..options.len()),
                |s| decreasing &= shortlex_lt(s.after.letters(), s.before.letters()),
            );
            ensure(decreasing, || format!("word {i}: a step did not decrease shortlex"))?;
            ensure(result == canonical, || format!("{w}: reached {result} and {canonical}"))?;
        }
    }
    Ok(())
}

fn reversible_or() -> Outcome {
    let table = bits::perm_from_table(vec![0, 5, 6, 7, 4, 1, 2, 3]).unwrap();
    let left = parse_qasm(&read("or_left.qasm")).map_err(|e| e.to_string())?;
    let right = parse_qasm(&read("or_right.qasm")).map_err(|e| e.to_string())?;
    let programs = [
        ("reversible_or1", definition("reversible_or.pi", "reversible_or1")?),
        ("reversible_or2", definition("reversible_or.pi", "reversible_or2")?),
        ("left circuit", qasm_to_pi(&left)),
        ("right circuit", qasm_to_pi(&right)),
    ];
    for (name, c) in &programs {
        let p = interp(c).map_err(|e| e.to_string())?;
        ensure(p == table, || format!("{name}: table {:?}", bits::table_of_perm(&p)))?;
        let out = bits::table_of_perm(&p)[0b011];
        ensure(out == 0b111, || format!("{name}: 011 maps to {out:03b}"))?;
    }
    let lt = trace(&left, 0b011);
    let rt = trace(&right, 0b011);
    ensure(lt == [0b111, 0b011, 0b111], || format!("left trace {lt:?}"))?;
    ensure(rt == [0b111, 0b101, 0b101, 0b111], || format!("right trace {rt:?}"))?;
    let reference = norm1(&programs[0].1).map_err(|e| e.to_string())?;
    for (name, c) in &programs {
        let verdict = equiv(&programs[0].1, c).map_err(|e| e.to_string())?;
        ensure(verdict.holds(), || format!("{name} reported inequivalent"))?;
        ensure(norm1(c).map_err(|e| e.to_string())? == reference, || format!("{name}: different normal form"))?;
    }
    let letters = [2, 1, 0, 3, 2, 1, 0, 4, 3, 2, 1, 5, 4, 3, 2];
    let w = hat_to_word(&word_to_hat(&perm_to_word(&table.inverse())));
    ensure(w.letters() == letters, || format!("normal word {w}"))?;
    let block = "assocl+ ; swap+ (+) id ; assocr+";
    let shown = reference.to_string();
    ensure(shown.matches(block).count() == letters.len(), || "unexpected block structure".into())?;
    ensure(synth(&table) == reference, || "synth differs from the normal form".into())
}

fn full_abstraction() -> Outcome {
    let (mut equal, mut unequal) = (0, 0);
    for seed in 0..1_000 {
        let (c1, c2, _) = oracle::gen_pair(seed, 8, 12);
        let d1 = denote_comb(&c1).map_err(|e| format!("seed {seed}: {e}"))?;
        let d2 = denote_comb(&c2).map_err(|e| format!("seed {seed}: {e}"))?;
        for (c, d) in [(&c1, &d1), (&c2, &d2)] {
            let p = interp(c).map_err(|e| e.to_string())?;
            ensure(&p == d, || format!("seed {seed}: interp disagrees on {c}"))?;
        }
        let verdict = equiv(&c1, &c2).map_err(|e| e.to_string())?;
        ensure((d1 == d2) == verdict.holds(), || format!("seed {seed}: verdict {verdict:?}"))?;
        if let Equivalence::Inequivalent { witness } = verdict {
            ensure(d1.apply(witness) != d2.apply(witness), || format!("seed {seed}: bad witness"))?;
        }
        if d1 == d2 {
            equal += 1;
        } else {
            unequal += 1;
        }
    }
    ensure(equal > 0 && unequal > 0, || format!("{equal} equal and {unequal} unequal pairs"))
}

fn level_two_soundness() -> Outcome {
    let mut rng = oracle::rng(9);
    for family in AxiomFamily::ALL {
        for i in 0..20 {
            let a = oracle::gen_axiom2(&mut rng, family);
            match check_axiom2(&a) {
                Ok(true) => {}
                Ok(false) => return Err(format!("{} binding {i}: sides differ", family.name())),
                Err(e) => return Err(format!("{} binding {i}: {e}", family.name())),
            }
        }
    }
    Ok(())
}

fn round_trips() -> Outcome {
    for n in 0..=6 {
        for p in oracle::all_permutations(n) {
            ensure(decode(&encode(&p)) == p, || format!("decode(encode({p}))"))?;
        }
    }
    let mut rng = oracle::rng(10);
    for _ in 0..500 {
        let n = rng.gen_range(0..=10);
        let p = oracle::random_permutation(&mut rng, n);
        let back = interp(&synth(&p).to_comb()).map_err(|e| e.to_string())?;
        ensure(back == p, || format!("synth then interp of {p} gave {back}"))?;
    }
    for seed in 0..500 {
        let c = oracle::gen_comb(seed, 10, 12);
        let text = print_comb(&c);
        let parsed = parse_comb(&text).map_err(|e| format!("`{text}`: {e}"))?;
        ensure(parsed == c, || format!("`{text}` reparsed differently"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("intro rewriting and equivalence", intro_rewriting),
        ("braid example", braid_example),
        ("Lehmer worked example", lehmer_worked_example),
        ("em correctness", em_correctness),
        ("word problem soundness and completeness", word_problem),
        ("termination and confluence", termination_and_confluence),
        ("reversibleOr case study", reversible_or),
        ("full abstraction", full_abstraction),
        ("level-2 soundness", level_two_soundness),
        ("round trips", round_trips),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
