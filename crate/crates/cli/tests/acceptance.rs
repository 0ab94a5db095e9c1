//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Every tolerance is exact.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vcrit::certify::{
    certify_colourable, colour_cogem_k4free, verify_certificate, CertifyError, CriticalList,
    FOUR_CRITICAL_COGEM_EDGES,
};
use vcrit::claims::{
    bull_equivalence, check_thm31_consequence, check_thm41_consequence, max_antichain,
    sperner_bound, SetFamily,
};
use vcrit::coloring::{chromatic_number, independence_number};
use vcrit::criticality::comparable_pair;
use vcrit::enumerate::{brute_force_critical, enumerate_critical, EnumerationConfig, EnumerationReport};
use vcrit::patterns::realize;
use vcrit::sample::Sampler;
use vcrit::{canonical_form, emit_graph6, parse_graph6, CanonicalForm, Graph};

type Check = Result<String, String>;

fn pat(names: &[&str]) -> Vec<Graph> {
    names.iter().map(|n| realize(n).unwrap()).collect()
}

fn enumerate(k: usize, forbidden: &[&str], max_order: usize) -> EnumerationReport {
    enumerate_critical(&EnumerationConfig::new(k, pat(forbidden), max_order)).unwrap()
}

fn counts(r: &EnumerationReport) -> String {
    r.counts_by_order
        .iter()
        .map(|(n, c)| format!("{c}@{n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// Every graph reported anywhere in the suite, for the comparable-pair check.
struct Emitted(Vec<Graph>);

fn c1(emitted: &mut Emitted) -> Check {
    let r = enumerate(4, &["co-gem"], 10);
    emitted.0.extend(r.found.iter().cloned());
    let mut drawn: Vec<CanonicalForm> = FOUR_CRITICAL_COGEM_EDGES
        .iter()
        .map(|(n, e)| canonical_form(&Graph::from_edges(*n, e).unwrap()).unwrap())
        .collect();
    drawn.sort();
    if r.forms != drawn {
        return Err(format!("library found {} graphs ({}), not the drawn nine", r.found.len(), counts(&r)));
    }
    let want: BTreeMap<usize, usize> = [(4, 1), (6, 1), (7, 7)].into_iter().collect();
    let got: BTreeMap<usize, usize> = r.counts_by_order.iter().filter(|(_, &c)| c > 0).map(|(&n, &c)| (n, c)).collect();
    if got != want {
        return Err(format!("orders {}", counts(&r)));
    }
    let out = Command::new(env!("CARGO_BIN_EXE_vcrit"))
        .args(["enumerate", "-k", "4", "--forbid", "co-gem", "--max-order", "10", "--stats", "/dev/null"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("binary exited with {}", out.status));
    }
    let lines: Vec<String> = String::from_utf8_lossy(&out.stdout).lines().map(String::from).collect();
    let drawn_text: Vec<String> = drawn.iter().map(|f| f.as_str().to_string()).collect();
    if lines != drawn_text {
        return Err(format!("binary printed {} lines differing from the drawn nine", lines.len()));
    }
    Ok(format!("9 graphs, {} (library and binary)", counts(&r)))
}

fn c2(emitted: &mut Emitted) -> Check {
    let r = enumerate(3, &["co-gem"], 9);
    emitted.0.extend(r.found.iter().cloned());
    let mut want = vec![
        canonical_form(&Graph::complete(3).unwrap()).unwrap(),
        canonical_form(&Graph::cycle(5).unwrap()).unwrap(),
    ];
    want.sort();
    if r.forms == want {
        Ok("exactly {K3, C5}".into())
    } else {
        Err(format!("found {}", counts(&r)))
    }
}

fn c3(emitted: &mut Emitted) -> Check {
    let r = enumerate(5, &["co-gem"], 9);
    emitted.0.extend(r.found.iter().cloned());
    let want: BTreeMap<usize, usize> = [(5, 1), (6, 0), (7, 1), (8, 7), (9, 228)].into_iter().collect();
    if r.counts_by_order == want {
        Ok(counts(&r))
    } else {
        Err(format!("counts {} (want 1@5 0@6 1@7 7@8 228@9)", counts(&r)))
    }
}

fn empty_slice(k: usize, forbidden: &[&str], max_order: usize) -> Check {
    let r = enumerate(k, forbidden, max_order);
    if r.found.is_empty() {
        Ok(format!(
            "none up to order {max_order} ({} candidates examined)",
            r.stats.candidates_by_order.values().sum::<u64>()
        ))
    } else {
        Err(format!("found {}", counts(&r)))
    }
}

fn c6(emitted: &mut Emitted) -> Check {
    let cases: [(usize, &[&str]); 5] = [
        (3, &["co-gem"]),
        (4, &["co-gem"]),
        (4, &["co-gem", "K4"]),
        (5, &["co-gem"]),
        (4, &["P3+P1"]),
    ];
    let mut sizes = Vec::new();
    for (k, names) in cases {
        let r = enumerate(k, names, 7);
        emitted.0.extend(r.found.iter().cloned());
        let oracle = brute_force_critical(k, &pat(names), 7).unwrap();
        if r.forms != oracle {
            return Err(format!(
                "k={k} {names:?}: search {} vs oracle {}",
                r.forms.len(),
                oracle.len()
            ));
        }
        sizes.push(oracle.len().to_string());
    }
    Ok(format!("all five families agree (sizes {})", sizes.join(", ")))
}

fn c7() -> Check {
    for k in 3..=5 {
        if !bull_equivalence(k, 9).unwrap() {
            return Err(format!("k={k} differs"));
        }
    }
    Ok("k = 3, 4, 5 at order 9".into())
}

fn c8() -> Check {
    let list = CriticalList::known(3, pat(&["co-gem"])).unwrap();
    let sampler = Sampler::new(&pat(&["co-gem"]), 0.5);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut verdicts: BTreeMap<&str, usize> = BTreeMap::new();
    for i in 0..1000 {
        let n = rng.gen_range(1..=14);
        let g = sampler.sample(&mut rng, n).ok_or("sampler gave up")?;
        match certify_colourable(&g, 3, &list) {
            Ok(cert) => {
                if !verify_certificate(&g, 3, &cert) {
                    return Err(format!("sample {i}: certificate rejected"));
                }
                *verdicts.entry(cert.verdict()).or_default() += 1;
            }
            Err(CertifyError::IncompleteList { .. }) => {
                return Err(format!("sample {i}: incomplete list on {}", emit_graph6(&g).unwrap()))
            }
            Err(e) => return Err(format!("sample {i}: {e}")),
        }
    }
    Ok(format!("1000/1000 verified, 0 incomplete-list errors {verdicts:?}"))
}

fn c9() -> Check {
    let family = pat(&["co-gem", "K4"]);
    let sampler = Sampler::new(&family, 0.5);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..500 {
        let n = rng.gen_range(1..=16);
        let g = sampler.sample(&mut rng, n).ok_or("sampler gave up")?;
        let c = colour_cogem_k4free(&g).map_err(|e| format!("sample {i}: {e}"))?;
        if !c.is_proper(&g, 4) {
            return Err(format!("sample {i}: improper colouring"));
        }
    }
    Ok("500/500 proper 4-colourings".into())
}

fn c10(emitted: &mut Emitted) -> Check {
    let r41 = enumerate(5, &["co-gem", "paw+P1"], 10);
    emitted.0.extend(r41.found.iter().cloned());
    for g in &r41.found {
        if !check_thm41_consequence(g).map_err(|e| e.to_string())? {
            return Err(format!("P3+2P1 in {}", emit_graph6(g).unwrap()));
        }
    }
    let r31 = enumerate(5, &["co-gem", "P5", "P3+P2"], 10);
    emitted.0.extend(r31.found.iter().cloned());
    for g in &r31.found {
        if !check_thm31_consequence(g, 5, 1).map_err(|e| e.to_string())? {
            return Err(format!("P3+10P1 in {}", emit_graph6(g).unwrap()));
        }
    }
    Ok(format!(
        "no P3+2P1 in {} graphs; no P3+10P1 in {} graphs",
        r41.found.len(),
        r31.found.len()
    ))
}

fn c11(emitted: &Emitted) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);

    for i in 0..10_000 {
        let n = rng.gen_range(0..=62);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let word = emit_graph6(&g).unwrap();
        if parse_graph6(&word).unwrap() != g {
            return Err(format!("graph6 round trip {i} failed"));
        }
    }

    for i in 0..1000 {
        let n = rng.gen_range(0..=24);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let mut perm: Vec<usize> = (0..n).collect();
        for j in (1..n).rev() {
            perm.swap(j, rng.gen_range(0..=j));
        }
        if canonical_form(&g).unwrap() != canonical_form(&g.permute(&perm)).unwrap() {
            return Err(format!("relabelling changed the canonical form in case {i}"));
        }
    }

    let mut families = 0u64;
    for n in 0..=4usize {
        let subsets = 1u64 << n;
        for sel in 0u64..(1u64 << subsets) {
            let members: Vec<u64> = (0..subsets).filter(|s| sel >> s & 1 == 1).collect();
            let f = SetFamily::new(n, members).unwrap();
            if max_antichain(&f).unwrap() as u64 > sperner_bound(n).unwrap() {
                return Err(format!("Sperner fails on n={n} family {sel:#x}"));
            }
            families += 1;
        }
    }
    for _ in 0..1000 {
        let n = rng.gen_range(0..=10usize);
        let m = rng.gen_range(0..=20usize);
        let mut members: Vec<u64> = (0..m).map(|_| rng.gen_range(0..1u64 << n)).collect();
        members.sort_unstable();
        members.dedup();
        let f = SetFamily::new(n, members).unwrap();
        if max_antichain(&f).unwrap() as u64 > sperner_bound(n).unwrap() {
            return Err(format!("Sperner fails on random n={n} family"));
        }
    }

    for g in &emitted.0 {
        if comparable_pair(g).is_some() {
            return Err(format!("comparable pair in {}", emit_graph6(g).unwrap()));
        }
    }

    for i in 0..1000 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let chi = chromatic_number(&g);
        let alpha = independence_number(&g);
        if chi * alpha < n {
            return Err(format!("ratio bound fails in case {i}"));
        }
    }
    Ok(format!(
        "graph6 10000, relabelling 1000, Sperner {families}+1000 families, {} emitted graphs comparable-free, ratio 1000",
        emitted.0.len()
    ))
}

fn main() {
    let mut emitted = Emitted(Vec::new());
    let mut failed = 0;
    let mut report = |id: &str, what: &str, f: &mut dyn FnMut() -> Check| {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("PASS {id} {what}: {detail} [exact, {secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {id} {what}: {detail} [exact, {secs:.1}s]");
            }
        }
    };
    report("C1", "4-critical co-gem-free graphs", &mut || c1(&mut emitted));
    report("C2", "3-critical co-gem-free graphs", &mut || c2(&mut emitted));
    report("C3", "5-critical co-gem-free census to order 9", &mut || c3(&mut emitted));
    report("C4", "5-critical (co-gem, K4)-free to order 12", &mut || {
        empty_slice(5, &["co-gem", "K4"], 12)
    });
    report("C5", "6-critical (co-gem, C5, K5)-free to order 11", &mut || {
        empty_slice(6, &["co-gem", "C5", "K5"], 11)
    });
    report("C6", "search equals brute force to order 7", &mut || c6(&mut emitted));
    report("C7", "(co-gem, bull)-free equals (P3+P1)-free", &mut c7);
    report("C8", "certify and verify 1000 co-gem-free graphs", &mut c8);
    report("C9", "4-colour 500 (co-gem, K4)-free graphs", &mut c9);
    report("C10", "structural consequences to order 10", &mut || c10(&mut emitted));
    report("C11", "invariant suites", &mut || c11(&emitted));
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 11 criteria passed");
}
