//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::time::Instant;

use crystal_branch_core::branching::{branch_table_of, profile_counts, raw_count, KWeight};
use crystal_branch_core::crystal::{
    build_crystal, e_tilde, f_tilde, highest_word, CrystalGraph, CrystalVertex, DominantWeight, DEFAULT_BUDGET,
};
use crystal_branch_core::iota::{b_tilde_at, deg_at, tensor_rule_holds};
use crystal_branch_core::irrep::{
    check_defining_relations, idivided_poly, idivided_polys_by_recursion, recursion_holds, verify_based_structure,
    BTildeComputer, Node, Parity, Rank1Module,
};
use crystal_branch_core::oracle::{decompose_character, dim_sl, weights_with_dim_at_most, xk_character_of};
use crystal_branch_core::qlaurent::q_binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Sweep {
    graphs: Vec<CrystalGraph>,
}

impl Sweep {
    fn build(ns: impl IntoIterator<Item = usize>, max_dim: u64) -> Self {
        let graphs = ns
            .into_iter()
            .flat_map(|n| weights_with_dim_at_most(n, max_dim))
            .map(|l| build_crystal(&l, DEFAULT_BUDGET).expect("sweep weights fit the default budget"))
            .collect();
        Sweep { graphs }
    }

    fn with_n<'a>(&'a self, ns: &'a [usize]) -> impl Iterator<Item = &'a CrystalGraph> {
        self.graphs.iter().filter(move |g| ns.contains(&g.n()))
    }
}

type Outcome = (bool, String);
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn verdict(violations: Vec<String>, checked: usize, what: &str) -> Outcome {
    let detail = match violations.first() {
        None => format!("{checked} {what}, 0 violations"),
        Some(first) => format!("{checked} {what}, {} violations, first: {first}", violations.len()),
    };
    (violations.is_empty(), detail)
}

fn branching_equals_oracle(sweep: &Sweep) -> Outcome {
    let mut bad = Vec::new();
    for g in &sweep.graphs {
        let ours = branch_table_of(g);
        let oracle = decompose_character(&g.lambda, &xk_character_of(g));
        match (ours, oracle) {
            (Ok(a), Ok(b)) if a.entries() == b.entries() => {}
            (a, b) => bad.push(format!("lambda={:?}: {:?} vs {:?}", g.lambda.coords(), a, b)),
        }
    }
    verdict(bad, sweep.graphs.len(), "weights")
}

fn dimension_identity(sweep: &Sweep) -> Outcome {
    let mut bad = Vec::new();
    for g in &sweep.graphs {
        let total = branch_table_of(g).and_then(|t| t.total_dim());
        let expected = dim_sl(&g.lambda);
        if total.as_ref().ok() != Some(&expected) || g.len() as u64 != expected {
            bad.push(format!("lambda={:?}: {:?} vs {expected}", g.lambda.coords(), total));
        }
    }
    verdict(bad, sweep.graphs.len(), "weights")
}

fn sign_symmetry(sweep: &Sweep) -> Outcome {
    let mut bad = Vec::new();
    let mut halvings = 0;
    for g in sweep.with_n(&[4, 6]) {
        let table = match branch_table_of(g) {
            Ok(t) => t,
            Err(e) => {
                bad.push(format!("lambda={:?}: {e}", g.lambda.coords()));
                continue;
            }
        };
        // every nu whose last coordinate is nonzero, occurring or not
        let mut candidates: BTreeSet<KWeight> = table.entries().keys().cloned().collect();
        candidates.extend(profile_counts(g).keys().map(|p| KWeight::new(p.iter().map(|&x| x as i64).collect())));
        for nu in candidates {
            if nu.coords().last() == Some(&0) || nu.coords().iter().any(|&x| x < 0) {
                continue;
            }
            halvings += 1;
            let raw = raw_count(g, &nu);
            if raw % 2 == 1 {
                bad.push(format!("lambda={:?} nu={nu}: odd raw count {raw}", g.lambda.coords()));
            }
            if table.get(&nu) != table.get(&nu.flip_last()) {
                bad.push(format!("lambda={:?} nu={nu}: asymmetric", g.lambda.coords()));
            }
        }
    }
    verdict(bad, halvings, "halvings")
}

fn cartan_consistency(sweep: &Sweep) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for g in sweep.with_n(&[3, 4, 5]).filter(|g| g.len() <= 500) {
        let counts = profile_counts(g);
        let ch = xk_character_of(g);
        let mut xis: BTreeSet<Vec<u32>> = counts.keys().cloned().collect();
        xis.extend(ch.terms.keys().map(|e| e.iter().map(|&x| (x.unsigned_abs() / 2) as u32).collect()));
        for xi in xis {
            checked += 1;
            let doubled: Vec<i64> = xi.iter().map(|&x| 2 * x as i64).collect();
            let nonzero = xi.iter().filter(|&&x| x != 0).count() as u32;
            let expected = (1i64 << nonzero) * ch.coeff(&doubled);
            let got = counts.get(&xi).copied().unwrap_or(0) as i64;
            if got != expected {
                bad.push(format!("lambda={:?} xi={xi:?}: {got} vs {expected}", g.lambda.coords()));
            }
        }
    }
    verdict(bad, checked, "profiles")
}

fn crystal_axioms(sweep: &Sweep) -> Outcome {
    let mut bad = Vec::new();
    for g in &sweep.graphs {
        let n = g.n();
        let l = || format!("lambda={:?}", g.lambda.coords());
        let mut highest = Vec::new();
        for v in 0..g.len() {
            if g.e[v].iter().all(Option::is_none) {
                highest.push(v);
            }
            for i in 1..n {
                if g.phi[v][i - 1] as i32 - g.eps[v][i - 1] as i32 != g.wt[v][i - 1] {
                    bad.push(format!("{} v={v} i={i}: string identity", l()));
                }
                let word = &g.vertices[v];
                if f_tilde(i, word).and_then(|w| g.index_of(&w)) != g.f[v][i - 1]
                    || e_tilde(i, word).and_then(|w| g.index_of(&w)) != g.e[v][i - 1]
                {
                    bad.push(format!("{} v={v} i={i}: not closed", l()));
                }
                if (g.f[v][i - 1].is_some() != (g.phi[v][i - 1] > 0))
                    || (g.e[v][i - 1].is_some() != (g.eps[v][i - 1] > 0))
                {
                    bad.push(format!("{} v={v} i={i}: string length", l()));
                }
                if let Some(w) = g.f[v][i - 1] {
                    if g.e[w][i - 1] != Some(v) {
                        bad.push(format!("{} v={v} i={i}: partial inverse", l()));
                    }
                    for j in 1..n {
                        let cartan = match i.abs_diff(j) {
                            0 => 2,
                            1 => -1,
                            _ => 0,
                        };
                        if g.wt[w][j - 1] != g.wt[v][j - 1] - cartan {
                            bad.push(format!("{} v={v} i={i}: weight shift", l()));
                        }
                    }
                }
                if let Some(w) = g.e[v][i - 1] {
                    if g.f[w][i - 1] != Some(v) {
                        bad.push(format!("{} v={v} i={i}: partial inverse", l()));
                    }
                }
            }
        }
        let lambda: Vec<i32> = g.lambda.coords().iter().map(|&c| c as i32).collect();
        if highest != [0] || g.wt[0] != lambda || g.vertices[0] != highest_word(&g.lambda) {
            bad.push(format!("{}: highest weight vertices {highest:?}", l()));
        }
        if g.len() as u64 != dim_sl(&g.lambda) {
            bad.push(format!("{}: {} vertices", l(), g.len()));
        }
    }
    verdict(bad, sweep.graphs.len(), "graphs")
}

fn iota_laws(sweep: &Sweep) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for g in &sweep.graphs {
        for v in 0..g.len() {
            for i in 1..g.n() {
                checked += 1;
                let d = deg_at(g, i, v);
                let ok = match b_tilde_at(g, i, v) {
                    None => d == 0,
                    Some(w) => d > 0 && deg_at(g, i, w) == d && b_tilde_at(g, i, w) == Some(v),
                };
                if !ok {
                    bad.push(format!("lambda={:?} v={v} i={i}", g.lambda.coords()));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let rank_one: Vec<CrystalGraph> =
        (0..=6).map(|a| build_crystal(&DominantWeight::new(2, vec![a]).unwrap(), DEFAULT_BUDGET).unwrap()).collect();
    for _ in 0..1000 {
        let g = &rank_one[rng.gen_range(0..rank_one.len())];
        let b = &g.vertices[rng.gen_range(0..g.len())];
        let len = rng.gen_range(0..=8);
        let u = CrystalVertex((0..len).map(|_| rng.gen_range(1..=2)).collect());
        checked += 1;
        if !tensor_rule_holds(b, &u) {
            bad.push(format!("tensor rule: b={} u={}", b.label(), u.label()));
        }
    }
    verdict(bad, checked, "cases")
}

fn q_identities() -> Outcome {
    let mut bad = Vec::new();
    for p in [Parity::Even, Parity::Odd] {
        for (k, ok) in recursion_holds(12, p) {
            if !ok {
                bad.push(format!("recursion {p:?} k={k}"));
            }
        }
        for (k, poly) in idivided_polys_by_recursion(12, p).iter().enumerate() {
            if poly != &idivided_poly(k as u32, p) {
                bad.push(format!("closed form {p:?} k={k}"));
            }
        }
    }
    for m in 0..=12 {
        for k in 0..=m {
            let c = q_binomial(m, k, 1);
            if !c.is_bar_invariant() || c.terms().any(|(_, x)| x.sign() == num_bigint::Sign::Minus) {
                bad.push(format!("binomial m={m} k={k}"));
            }
        }
    }
    verdict(bad, 2 * 25 + 91, "identities")
}

fn rank_one() -> Outcome {
    let bad = (0..=10)
        .map(|l| Rank1Module::new(l).verify())
        .filter(|r| !r.passed())
        .map(|r| format!("l={}: {:?}", r.l, r.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()))
        .collect();
    verdict(bad, 11, "modules")
}

fn example_graph(nu: u32) -> BTreeSet<(u8, Node, Node)> {
    use Node::{Minus as M, Plus as P};
    let edges = match nu {
        2 => vec![(1, P(0), M(0)), (1, P(1), M(1)), (2, M(0), M(1)), (2, P(1), P(2))],
        3 => vec![(1, P(0), M(0)), (1, P(1), M(1)), (1, P(2), M(2)), (2, P(0), P(1)), (2, M(1), M(2)), (2, P(2), P(3))],
        _ => unreachable!(),
    };
    edges.into_iter().collect()
}

fn based_structure() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for nu in 0..=6 {
        let r = verify_based_structure(nu);
        checked += r.checks.len();
        bad.extend(r.failures().map(|c| format!("nu={nu} {} k={:?}", c.name, c.k)));
    }
    for nu in [2, 3] {
        let computed: Option<BTreeSet<_>> =
            BTildeComputer::new(nu).and_then(|c| c.graph()).map(|g| g.edges().into_iter().collect());
        if computed.as_ref() != Some(&example_graph(nu)) {
            bad.push(format!("nu={nu} graph {computed:?}"));
        }
    }
    verdict(bad, checked, "checks")
}

fn defining_relations() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for nu in 0..=5 {
        let r = check_defining_relations(nu);
        checked += r.checks.len();
        bad.extend(r.failures().map(|c| format!("nu={nu} {}", c.name)));
    }
    verdict(bad, checked, "relations")
}

fn main() {
    let start = Instant::now();
    let sweep = Sweep::build(3..=7, 2000);
    let criteria: Vec<Criterion> = vec![
        ("branching equals oracle", Box::new(|| branching_equals_oracle(&sweep))),
        ("dimension identity", Box::new(|| dimension_identity(&sweep))),
        ("sign symmetry and evenness", Box::new(|| sign_symmetry(&sweep))),
        ("Cartan multiplicity consistency", Box::new(|| cartan_consistency(&sweep))),
        ("crystal axioms", Box::new(|| crystal_axioms(&sweep))),
        ("iota operator laws", Box::new(|| iota_laws(&sweep))),
        ("q-identities", Box::new(q_identities)),
        ("rank-1 module", Box::new(rank_one)),
        ("n=3 based module", Box::new(based_structure)),
        ("defining relations", Box::new(defining_relations)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (pass, detail) = run();
        failed += usize::from(!pass);
        println!(
            "criterion {:>2} {} {name}: {detail} ({:.1}s)",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {}/{} passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
