//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use idealtop::families::Family;
use idealtop::harness::{self, CheckId, CorpusSpec, Status, TheoremReport, VerifyRun};
use idealtop::ideal::{classify, enumerate_ideals};
use idealtop::ring::{build_ring, RingSpec};
use serde_json::Value;

struct Line {
    number: u8,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn no_failures(r: &TheoremReport) -> bool {
    r.counts.fail == 0 && r.counts.skipped == 0
}

fn sober_equivalence(run: &VerifyRun, elapsed: Duration) -> Line {
    let r = run.report(CheckId::SoberEq).expect("ran");
    let all_families = r.verdicts.iter().all(|v| {
        v.detail["families"]
            .as_object()
            .map_or(false, |m| Family::ALL.iter().all(|f| m.contains_key(f.tag())))
    });
    let disagreements: usize = r
        .verdicts
        .iter()
        .flat_map(|v| v.detail["families"].as_object().into_iter().flat_map(|m| m.values()))
        .filter(|f| f["direct"] != f["criterion"])
        .count();
    Line {
        number: 1,
        name: "sober criterion equals direct soberness",
        pass: run.corpus_size >= 150
            && all_families
            && disagreements == 0
            && no_failures(r)
            && elapsed <= Duration::from_secs(300),
        detail: format!(
            "{} rings x 16 families, {} disagreements, {:.1}s",
            run.corpus_size,
            disagreements,
            elapsed.as_secs_f64()
        ),
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn distinct_primes(n: usize) -> Vec<usize> {
    (2..=n).filter(|&p| is_prime(p) && n % p == 0).collect()
}

fn zmod_classification() -> Line {
    let mut mismatches = Vec::new();
    for n in 2..=256usize {
        let ring = build_ring(&RingSpec::zmod(n as u64)).unwrap();
        let lat = enumerate_ideals(&ring).unwrap();
        let cls = classify(&lat);
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        // (d) = multiples of d, of size n/d; canonical order is by size
        let mut expected: Vec<Vec<usize>> = divisors
            .iter()
            .map(|&d| (0..n).filter(|x| x % d == 0).collect())
            .collect();
        expected.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let got: Vec<Vec<usize>> = lat.ideals().iter().map(|i| i.elements()).collect();
        if got != expected {
            mismatches.push(format!("lattice of Z/{n}"));
            continue;
        }
        for (i, members) in expected.iter().enumerate() {
            let d = if members.len() == 1 { n } else { members[1] };
            let proper = d != 1;
            let primes = distinct_primes(d);
            let prime = proper && is_prime(d);
            let primary = proper && primes.len() == 1;
            let radical = proper && primes.iter().product::<usize>() == d;
            let f = cls.flags(i);
            if f.prime != prime || f.primary != primary || (f.radical && f.proper) != radical {
                mismatches.push(format!("({d}) in Z/{n}"));
            }
        }
    }
    Line {
        number: 2,
        name: "Z/n lattices and prime/primary/radical flags, n <= 256",
        pass: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            "255 rings match the divisor oracle".into()
        } else {
            format!("mismatches: {}", mismatches.join(", "))
        },
    }
}

fn prm_irreducibility_and_soberness(run: &VerifyRun) -> Line {
    let irrid = run.report(CheckId::PrmIrrid).expect("ran");
    let sober = run.report(CheckId::PrmSober).expect("ran");
    let witnesses_valid = irrid
        .verdicts
        .iter()
        .filter(|v| v.status == Status::Pass)
        .all(|v| v.detail["cover_valid"] == Value::Bool(true) && v.detail["irreducible"] == Value::Bool(false));
    Line {
        number: 3,
        name: "Prm(R) not irreducible when non-local; always sober and spectral",
        pass: no_failures(irrid) && no_failures(sober) && witnesses_valid,
        detail: format!(
            "{} non-local rings split with validated covers, {} local; {} of {} sober and spectral",
            irrid.counts.pass,
            irrid.counts.not_applicable,
            sober.counts.pass,
            run.corpus_size
        ),
    }
}

fn homeomorphisms(run: &VerifyRun) -> Line {
    let loc = run.report(CheckId::PrmLoc).expect("ran");
    let quot = run.report(CheckId::QuotHomeo).expect("ran");
    let maximal: usize = loc
        .verdicts
        .iter()
        .map(|v| v.detail["maximal_ideals"].as_array().map_or(0, Vec::len))
        .sum();
    let ideals: u64 = quot
        .verdicts
        .iter()
        .map(|v| v.detail["ideals_checked"].as_u64().unwrap_or(0))
        .sum();
    Line {
        number: 4,
        name: "localization and quotient homeomorphisms",
        pass: no_failures(loc) && no_failures(quot),
        detail: format!("{maximal} maximal ideals, {ideals} ideals, zero exceptions"),
    }
}

fn infima(run: &VerifyRun) -> Line {
    let r = run.report(CheckId::Inf).expect("ran");
    let sets: u64 = r
        .verdicts
        .iter()
        .flat_map(|v| v.detail["families"].as_object().into_iter().flat_map(|m| m.values()))
        .map(|f| f["directed_sets"].as_u64().unwrap_or(0) + f["chains"].as_u64().unwrap_or(0))
        .sum();
    Line {
        number: 5,
        name: "infima of lower-directed sets stay in sober families",
        pass: no_failures(r),
        detail: format!("{sets} directed sets and chains"),
    }
}

fn integers() -> Line {
    let spec = CorpusSpec::default();
    let start = Instant::now();
    let run = harness::run(&spec, &[CheckId::Z]).expect("runs");
    let elapsed = start.elapsed();
    let r = run.report(CheckId::Z).expect("ran");
    let d = &r.verdicts[0].detail;
    let pairs = d["reg_z"]["irreducible"]["pairs_checked"].as_u64().unwrap_or(0);
    let pass = r.passed()
        && spec.z_bound == 10_000
        && d["reg_z_certificate_valid"] == Value::Bool(true)
        && d["prm_z"]["sober_bounded"] == Value::Bool(true)
        && elapsed <= Duration::from_secs(60);
    Line {
        number: 6,
        name: "Reg(Z) irreducible and not sober, Prm(Z) sober to 10^4",
        pass,
        detail: format!("{pairs} subbasic pairs, {:.1}s", elapsed.as_secs_f64()),
    }
}

fn adversarial(run: &VerifyRun) -> Line {
    let r = run.report(CheckId::Adversarial).expect("ran");
    let non_sober: Vec<&str> = r
        .verdicts
        .iter()
        .filter(|v| v.detail["sober"] == Value::Bool(false) || v.ring == "reg-z")
        .map(|v| v.ring.as_str())
        .collect();
    Line {
        number: 7,
        name: "adversarial fixtures are reported non-sober",
        pass: r.passed() && non_sober.len() >= 4,
        detail: format!("non-sober as designed: {}", non_sober.join(", ")),
    }
}

fn determinism() -> Line {
    let dir = tempfile::tempdir().expect("temp dir");
    let bin = env!("CARGO_BIN_EXE_idealtop");
    let mut outputs = Vec::new();
    for k in 0..2 {
        let out = dir.path().join(format!("run{k}"));
        let status = Command::new(bin)
            .args(["verify", "--all", "--seed", "7", "--out"])
            .arg(&out)
            .output()
            .expect("binary runs");
        let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(&out)
            .expect("reports written")
            .map(|e| {
                let e = e.unwrap();
                (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap())
            })
            .collect();
        files.sort();
        outputs.push((status.status.success(), files));
    }
    let same = outputs[0].1 == outputs[1].1;
    Line {
        number: 8,
        name: "verify --all is byte-identical across runs",
        pass: same && outputs[0].0 && outputs[0].1.len() == CheckId::ALL.len() + 1,
        detail: format!("{} report files compared", outputs[0].1.len()),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let run = harness::run(&CorpusSpec::default(), &CheckId::ALL).expect("harness runs");
    let elapsed = start.elapsed();
    let lines = vec![
        sober_equivalence(&run, elapsed),
        zmod_classification(),
        prm_irreducibility_and_soberness(&run),
        homeomorphisms(&run),
        infima(&run),
        integers(),
        adversarial(&run),
        determinism(),
    ];
    for l in &lines {
        println!(
            "criterion {} {}: {} ({})",
            l.number,
            if l.pass { "PASS" } else { "FAIL" },
            l.name,
            l.detail
        );
    }
    if lines.iter().all(|l| l.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
