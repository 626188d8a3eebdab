//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use minkowski_order::arrangement::{
    braid_arrangement, build_event_arrangement, characteristic_polynomial, chromatic_polynomial, cone,
    f_bound, graphical_arrangement, region_count, stirling_c,
};
use minkowski_order::classical::{bisector_arrangement, monte_carlo_observed, observed_order_at, observed_orders};
use minkowski_order::exactmath::IntPolynomial;
use minkowski_order::ordering::{graph_order_bound, saturating_dilation};
use minkowski_order::relativity::{causal_poset, dilate, separation_graph};
use minkowski_order::sweep::{
    critical_velocities, known_unrealizable_word, lambda_sequence, reduced_word, staircase_chain_count,
};
use minkowski_order::{count_orders, feasible_orders, EventSet, Graph, Permutation, Rational};
use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn perm(s: &str) -> Permutation {
    Permutation::from_digits(s).unwrap()
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let e = EventSet::from_ints(1, &[(0, &[1]), (1, &[6]), (2, &[4]), (3, &[11])]).unwrap();
    let table = critical_velocities(&e).map_err(|x| x.to_string())?;
    ensure(table.get(0, 1) == Some(&Rational::ratio(1, 5)), || "v12 != 1/5".into())?;
    let order: Vec<(usize, usize)> = table.sorted().into_iter().map(|(p, _)| p).collect();
    ensure(order == vec![(1, 2), (2, 3), (0, 1), (0, 3), (1, 3), (0, 2)], || format!("sorted pairs {order:?}"))?;
    let count = count_orders(&e).map_err(|x| x.to_string())?;
    ensure(count == 7, || format!("count {count}"))?;
    let lambda = lambda_sequence(&e).map_err(|x| x.to_string())?;
    let want: Vec<Permutation> =
        ["1324", "1234", "1243", "2143", "2413", "4213", "4231"].iter().map(|s| perm(s)).collect();
    ensure(lambda.entries() == &want[..], || format!("lambda {:?}", lambda.entries()))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok("v12 = 1/5, 7 orders, sequence matches".into())
}

fn saturation() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut saturated = 0;
    let mut trials = 0;
    for i in 0..60 {
        let k = 2 + i % 4;
        let n = 1 + (i / 4) % 3;
        let e = common::generic_spacelike_events(&mut rng, k, n);
        let bound = f_bound(n, k);
        let c = count_orders(&e).map_err(|x| x.to_string())?;
        ensure(BigUint::from(c) <= bound, || format!("count {c} > f({n},{k}) at a = 1"))?;
        let a = saturating_dilation(&e, 40)
            .map_err(|x| x.to_string())?
            .ok_or_else(|| format!("no saturating dilation for k={k}, n={n}"))?;
        let c = count_orders(&dilate(&e, &a).unwrap()).map_err(|x| x.to_string())?;
        ensure(BigUint::from(c) == bound, || format!("count {c} != f({n},{k}) at a = {a}"))?;
        saturated += 1;
        trials += 2;
    }
    // Non-generic inputs: few distinct coordinates force coincidences.
    for i in 0..40 {
        let k = 3 + i % 3;
        let n = 1 + i % 3;
        let e = common::spacelike_events(&mut rng, k, n, 1, 3);
        let c = count_orders(&e).map_err(|x| x.to_string())?;
        ensure(BigUint::from(c) <= f_bound(n, k), || format!("count {c} > f({n},{k})"))?;
        trials += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{saturated} sets saturated, bound held on {trials} counts, {:.1}s", elapsed.as_secs_f64()))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut mixed = 0;
    for i in 0..120 {
        let k = 2 + i % 4;
        let n = 1 + (i / 4) % 3;
        let e = common::mixed_events(&mut rng, k, n);
        if common::is_mixed(&e) {
            mixed += 1;
        }
        let lp = feasible_orders(&e, false).map_err(|x| x.to_string())?.len();
        let arrangement = build_event_arrangement(&e, &separation_graph(&e).unwrap()).map_err(|x| x.to_string())?;
        let regions = region_count(&arrangement).map_err(|x| x.to_string())?;
        ensure(BigUint::from(lp) == regions, || format!("{lp} orders vs {regions} regions for {e:?}"))?;
    }
    ensure(mixed >= 50, || format!("only {mixed} mixed sets"))?;
    Ok(format!("120 sets agree ({mixed} mixed)"))
}

/// Coefficients of `t(t-1)...(t-k+1)`, lowest degree first.
fn falling_factorial_coeffs(k: usize) -> Vec<i64> {
    let mut c = vec![1i64];
    for i in 0..k as i64 {
        let mut next = vec![0i64; c.len() + 1];
        for (d, &x) in c.iter().enumerate() {
            next[d + 1] += x;
            next[d] -= i * x;
        }
        c = next;
    }
    c
}

fn chromatic_identities() -> Outcome {
    for k in 1..=6 {
        let chi = characteristic_polynomial(&braid_arrangement(k)).map_err(|x| x.to_string())?;
        let want = IntPolynomial::new(falling_factorial_coeffs(k).into_iter().map(BigInt::from).collect());
        ensure(chi == want, || format!("braid k={k}: {chi}"))?;
    }
    let mut graphs = 0;
    for k in 1..=5 {
        for g in Graph::all_on(k) {
            let chi = characteristic_polynomial(&graphical_arrangement(&g)).map_err(|x| x.to_string())?;
            let dc = chromatic_polynomial(&g);
            ensure(chi == dc, || format!("{g:?}: {chi} vs {dc}"))?;
            graphs += 1;
        }
    }
    Ok(format!("braid k <= 6, {graphs} graphs"))
}

fn cone_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..60 {
        let n = 1 + i % 3;
        let m = 1 + rng.gen_range(0..6);
        let a = common::random_arrangement(&mut rng, n, m);
        let r = region_count(&a).map_err(|x| x.to_string())?;
        let rc = region_count(&cone(&a).unwrap()).map_err(|x| x.to_string())?;
        ensure(rc == &r * 2u32, || format!("r(cA) = {rc}, r(A) = {r}"))?;
    }
    Ok("60 arrangements".into())
}

fn forbidden_triple() -> Outcome {
    let listed: BTreeSet<Vec<Permutation>> = [
        ["123", "132", "312", "321"],
        ["213", "123", "132", "312"],
        ["231", "213", "123", "132"],
        ["321", "231", "213", "123"],
        ["321", "312", "132", "123"],
        ["312", "132", "123", "213"],
        ["132", "123", "213", "231"],
        ["123", "213", "231", "321"],
    ]
    .iter()
    .map(|s| s.iter().map(|p| perm(p)).collect())
    .collect();
    let triple = [perm("123"), perm("231"), perm("312")];
    let mut seen = BTreeSet::new();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..1200 {
        let e = common::sweep_events(&mut rng, 3);
        let orders = feasible_orders(&e, true).map_err(|x| x.to_string())?;
        ensure(!triple.iter().all(|p| orders.contains(p)), || format!("triple realized by {e:?}"))?;
        let lambda = lambda_sequence(&e).map_err(|x| x.to_string())?.entries().to_vec();
        ensure(listed.contains(&lambda), || format!("unlisted sequence {lambda:?}"))?;
        seen.insert(lambda);
    }
    ensure(seen.len() == 8, || format!("only {} of 8 sequences found", seen.len()))?;
    Ok("1200 configurations, all 8 sequences found".into())
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|a| (a + 1..p.len()).filter(|&b| p[a] > p[b]).count()).sum()
}

/// Independent check of one sequence: adjacent swaps, and inversion count
/// relative to the first entry rising by one each step.
fn check_chain(seq: &[Vec<usize>]) -> Result<(), String> {
    let k = seq[0].len();
    ensure(seq.len() == 1 + k * (k - 1) / 2, || "wrong length".into())?;
    let mut rank = vec![0; k];
    for (r, &i) in seq[0].iter().enumerate() {
        rank[i] = r;
    }
    for (step, w) in seq.windows(2).enumerate() {
        let diff: Vec<usize> = (0..k).filter(|&p| w[0][p] != w[1][p]).collect();
        ensure(diff.len() == 2 && diff[1] == diff[0] + 1, || format!("step {step} is not an adjacent swap"))?;
        let relabeled: Vec<usize> = w[1].iter().map(|&i| rank[i]).collect();
        ensure(inversions(&relabeled) == step + 1, || format!("step {step} inversion count"))?;
    }
    Ok(())
}

fn brute_chains(k: usize) -> u64 {
    fn walk(p: &mut Vec<usize>, inv: usize, target: usize) -> u64 {
        if inv == target {
            return 1;
        }
        let mut total = 0;
        for i in 0..p.len() - 1 {
            if p[i] < p[i + 1] {
                p.swap(i, i + 1);
                total += walk(p, inv + 1, target);
                p.swap(i, i + 1);
            }
        }
        total
    }
    walk(&mut (0..k).collect(), 0, k * (k - 1) / 2)
}

fn weak_order() -> Outcome {
    for (k, want) in [(3, 2u32), (4, 16), (5, 768)] {
        ensure(staircase_chain_count(k) == BigUint::from(want), || format!("k={k}"))?;
    }
    for k in 2..=4 {
        ensure(staircase_chain_count(k) == BigUint::from(brute_chains(k)), || format!("brute force k={k}"))?;
    }
    let forbidden = known_unrealizable_word(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut words5 = BTreeSet::new();
    for i in 0..600 {
        let k = 2 + i % 4;
        let e = common::sweep_events(&mut rng, k);
        let lambda = lambda_sequence(&e).map_err(|x| x.to_string())?;
        let raw: Vec<Vec<usize>> = lambda.entries().iter().map(|p| p.as_slice().to_vec()).collect();
        check_chain(&raw)?;
        let word = reduced_word(&lambda).map_err(|x| x.to_string())?;
        if k == 5 {
            ensure(word != forbidden, || format!("forbidden word from {e:?}"))?;
            words5.insert(word);
        }
    }
    Ok(format!("600 sequences, {} distinct k=5 words, none forbidden", words5.len()))
}

fn classical_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..60 {
        let k = 2 + i % 4;
        let n = 1 + (i / 4) % 3;
        let p = common::generic_points(&mut rng, k, n);
        let orders = observed_orders(&p).map_err(|x| x.to_string())?;
        let regions = region_count(&bisector_arrangement(&p).unwrap()).map_err(|x| x.to_string())?;
        let bound: BigUint = (0..=n.min(k)).map(|j| stirling_c(k, k - j)).sum();
        ensure(BigUint::from(orders.len()) == bound, || format!("{} orders, bound {bound}", orders.len()))?;
        ensure(regions == bound && bound == f_bound(n, k), || format!("regions {regions}, bound {bound}"))?;
        for w in orders.witnesses() {
            ensure(observed_order_at(&p, &w.velocity).ok().as_ref() == Some(&w.order), || "bad witness".into())?;
        }
        let mc = monte_carlo_observed(&p, 300, i as u64).map_err(|x| x.to_string())?;
        ensure(mc.is_subset_of(&orders), || "Monte Carlo order outside the enumeration".into())?;
    }
    Ok("60 generic point sets".into())
}

fn graph_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..120 {
        let k = 2 + i % 4;
        let n = 1 + (i / 4) % 3;
        let e = common::mixed_events(&mut rng, k, n);
        let g = separation_graph(&e).map_err(|x| x.to_string())?;
        let c = count_orders(&e).map_err(|x| x.to_string())?;
        let b = graph_order_bound(&g, n).map_err(|x| x.to_string())?;
        ensure(BigUint::from(c) <= b, || format!("count {c} > bound {b} for {e:?}"))?;
        let inc = causal_poset(&e).map_err(|x| x.to_string())?.incomparability_graph();
        ensure(inc == g, || format!("incomparability graph differs for {e:?}"))?;
    }
    Ok("120 mixed sets".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("worked example on a line", worked_example),
        ("saturation under dilation", saturation),
        ("order enumeration equals region count", oracle_equivalence),
        ("braid and chromatic identities", chromatic_identities),
        ("cone doubles regions", cone_identity),
        ("three events on a line", forbidden_triple),
        ("weak order chains", weak_order),
        ("classical observation orders", classical_bound),
        ("separation graph bound", graph_bound),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
