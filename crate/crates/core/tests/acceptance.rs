//! End-to-end acceptance checks, one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use powerdom::construct::{construct_2ec, construct_doubled_pair, construct_general};
use powerdom::exact::{domination_number, gamma_p_exact, tree_pd_equals_dom, SearchLimits};
use powerdom::graph::trees::free_trees;
use powerdom::graph::{bridges, cartesian_product, generate, Family, Multigraph, Vertex};
use powerdom::observe::{
    closure_with_random_schedule, power_dominating_closure, verify_certificate, zero_forcing_closure, EdgeCopy, Model,
};
use powerdom::products::{pd_bounds, vizing_tree_check, VizingVerdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn gen(f: Family) -> Multigraph {
    generate(&f).unwrap()
}

fn lim() -> SearchLimits {
    SearchLimits::default()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pd(g: &Multigraph) -> usize {
    gamma_p_exact(g, Model::Vertex, &lim()).unwrap().value
}

fn exact_values() -> Check {
    let start = Instant::now();
    let fig1 = pd(&gen(Family::Figure1));
    ensure(fig1 == 2, || format!("γ_P(figure1) = {fig1}"))?;
    let d1 = gen(Family::DiamondNecklace(1));
    let d2 = gen(Family::DiamondNecklace(2));
    ensure(pd(&d1) == 1 && 4 * pd(&d1) == d1.order(), || format!("γ_P(D_1) = {}", pd(&d1)))?;
    ensure(pd(&d2) == 2 && 4 * pd(&d2) == d2.order(), || format!("γ_P(D_2) = {}", pd(&d2)))?;
    let k33 = pd(&gen(Family::CompleteBipartite(3, 3)));
    ensure(k33 == 2, || format!("γ_P(K_3,3) = {k33}"))?;
    let c3 = gen(Family::Cycle(3));
    let prism = cartesian_product(&c3, &gen(Family::Path(2))).unwrap();
    let gamma_c3 = domination_number(&c3, &lim()).unwrap().value;
    ensure(pd(&prism) == 1 && gamma_c3 == 1, || format!("γ_P(C_3 □ K_2) = {}", pd(&prism)))?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.1}s"))?;
    Ok(format!("figure1 2, D_1 1, D_2 2, K_3,3 2, C_3 □ K_2 1 in {secs:.2}s"))
}

/// The corpus of triangle expansions: `(n, seed)` pairs with n up to 60.
fn cfdf_corpus() -> Vec<Multigraph> {
    let mut out = Vec::new();
    for half in 1..=10 {
        for seed in 0..6 {
            out.push(gen(Family::RandomCfdf { n: 2 * half, seed }));
        }
    }
    out
}

fn two_edge_connected(corpus: &[Multigraph]) -> Check {
    let mut exact_checked = 0;
    for g in corpus {
        let c = construct_2ec(g).map_err(|e| format!("order {}: {e}", g.order()))?;
        verify_certificate(&c.certificate, g).map_err(|e| e.to_string())?;
        ensure(6 * c.set().len() == g.order(), || format!("|S| = {} on order {}", c.set().len(), g.order()))?;
        if g.order() <= 24 {
            let x = pd(g);
            ensure(x <= c.set().len(), || format!("exact {x} above |S|"))?;
            exact_checked += 1;
        }
    }
    let max = corpus.iter().map(Multigraph::order).max().unwrap();
    ensure(corpus.len() >= 50 && max <= 60, || "corpus too small".into())?;
    Ok(format!("{} instances up to n = {max}, {exact_checked} cross-checked exactly", corpus.len()))
}

fn general_case() -> Check {
    let mut count = 0;
    let mut largest = 0;
    for parts in 2..=8 {
        for seed in 0..4 {
            let g = gen(Family::RandomBridgedCfdf { parts, seed });
            ensure(!bridges(&g).unwrap().is_empty(), || "instance has no bridge".into())?;
            let c = construct_general(&g).map_err(|e| format!("parts {parts} seed {seed}: {e}"))?;
            verify_certificate(&c.certificate, &g).map_err(|e| e.to_string())?;
            ensure(6 * c.set().len() <= g.order(), || format!("|S| = {} on order {}", c.set().len(), g.order()))?;
            count += 1;
            largest = largest.max(g.order());
        }
    }
    ensure(count >= 20, || "too few instances".into())?;
    Ok(format!("{count} bridged instances up to n = {largest}"))
}

fn doubled_pair() -> Check {
    let mut count = 0;
    for half in 1..=7 {
        for seed in 0..4 {
            let g = gen(Family::RandomDoubledPair { n: 2 * half, seed });
            let c = construct_doubled_pair(&g).map_err(|e| format!("n {} seed {seed}: {e}", g.order()))?;
            ensure(c.certificate.model == Model::Edge, || "not certified under the edge model".into())?;
            verify_certificate(&c.certificate, &g).map_err(|e| e.to_string())?;
            ensure(6 * c.set().len() <= g.order() - 2, || format!("|S| = {} on order {}", c.set().len(), g.order()))?;
            let p = c.log.doubled_pair.ok_or("no doubled pair logged")?;
            ensure(!c.set().iter().any(|v| [p.u, p.v, p.w, p.z].contains(v)), || format!("S meets {p:?}"))?;
            count += 1;
        }
    }
    ensure(count >= 20, || "too few instances".into())?;
    Ok(format!("{count} instances, all with |S| <= (n-2)/6 avoiding u, v, w, z"))
}

fn random_simple(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Multigraph {
    let edges: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Multigraph::from_edges(n, edges).unwrap()
}

fn random_multigraph(rng: &mut ChaCha8Rng, n: usize) -> Multigraph {
    let m = rng.gen_range(n..3 * n);
    let edges: Vec<(Vertex, Vertex, usize)> = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(1..3)))
        .filter(|(u, v, _)| u != v)
        .collect();
    Multigraph::from_weighted_edges(n, edges).unwrap()
}

fn random_seed_set(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vertex> {
    let mut s: Vec<Vertex> = (0..n).filter(|_| rng.gen_bool(0.15)).collect();
    if s.is_empty() {
        s.push(rng.gen_range(0..n));
    }
    s
}

fn observation_engine() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..100 {
        let n = rng.gen_range(3..16);
        let g = if i % 2 == 0 { random_multigraph(&mut rng, n) } else { random_simple(&mut rng, n, 0.3) };
        let s = random_seed_set(&mut rng, n);
        let mut sched = ChaCha8Rng::seed_from_u64(rng.gen());
        let canonical = power_dominating_closure(&g, &s, Model::Edge).unwrap().observed;
        let any = closure_with_random_schedule(&g, &s, Model::Edge, false, &mut sched).unwrap();
        ensure(any == canonical, || format!("edge closure depends on the schedule for {s:?}"))?;
        if g.is_simple() {
            let v = power_dominating_closure(&g, &s, Model::Vertex).unwrap().observed;
            ensure(closure_with_random_schedule(&g, &s, Model::Vertex, false, &mut sched).unwrap() == v, || {
                "vertex closure depends on the schedule".into()
            })?;
            let z = zero_forcing_closure(&g, &s).unwrap().observed;
            ensure(closure_with_random_schedule(&g, &s, Model::Vertex, true, &mut sched).unwrap() == z, || {
                "zero forcing depends on the schedule".into()
            })?;
        }
    }
    for _ in 0..200 {
        let n = rng.gen_range(2..18);
        let p = rng.gen_range(0.1..0.5);
        let g = random_simple(&mut rng, n, p);
        let s = random_seed_set(&mut rng, n);
        let v = power_dominating_closure(&g, &s, Model::Vertex).unwrap().observed;
        let e = power_dominating_closure(&g, &s, Model::Edge).unwrap().observed;
        ensure(v == e, || format!("models disagree on {s:?}"))?;
    }
    // w - u = v - z with the u = v edge doubled, seeded at w.
    let gadget = Multigraph::from_weighted_edges(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1)]).unwrap();
    let t = power_dominating_closure(&gadget, &[0], Model::Edge).unwrap();
    ensure(t.observed == vec![0, 1], || format!("gadget observed {:?}", t.observed))?;
    ensure(t.observed_edges == vec![EdgeCopy(0, 1, 0)], || "gadget observed extra edges".into())?;
    ensure(t.propagation_rounds() == 0, || "gadget propagated".into())?;
    Ok("100 confluence triples, 200 model agreements, gadget stalls at {w, u}".into())
}

/// Minimum number of blocks over all set partitions of `V(t)` into spiders,
/// enumerated as restricted growth strings.
fn spider_partition_oracle(t: &Multigraph) -> usize {
    let n = t.order();
    let adj: Vec<u32> = t.vertices().map(|v| t.neighbors(v).fold(0, |m, w| m | 1 << w)).collect();
    let spider = |mask: u32| {
        let mut edges = 0;
        let mut branch = 0;
        for (v, &nbrs) in adj.iter().enumerate() {
            if mask >> v & 1 == 1 {
                let d = (nbrs & mask).count_ones();
                edges += d;
                if d >= 3 {
                    branch += 1;
                }
            }
        }
        edges / 2 + 1 == mask.count_ones() && branch <= 1
    };
    let mut best = n;
    let mut rgs = vec![0usize; n];
    fn walk(i: usize, blocks: usize, rgs: &mut Vec<usize>, best: &mut usize, spider: &dyn Fn(u32) -> bool) {
        if blocks >= *best {
            return;
        }
        if i == rgs.len() {
            let ok = (0..blocks).all(|b| {
                let mask = rgs.iter().enumerate().filter(|&(_, &x)| x == b).fold(0u32, |m, (v, _)| m | 1 << v);
                spider(mask)
            });
            if ok {
                *best = blocks;
            }
            return;
        }
        for b in 0..=blocks {
            rgs[i] = b;
            walk(i + 1, blocks.max(b + 1), rgs, best, spider);
        }
    }
    if n > 0 {
        walk(1, 1, &mut rgs, &mut best, &spider);
    }
    best
}

fn tree_theorems() -> Check {
    let mut trees = 0;
    let mut equal = 0;
    for n in 1..=10 {
        for t in free_trees(n) {
            let gp = pd(&t);
            let sp = spider_partition_oracle(&t);
            ensure(gp == sp, || format!("γ_P {gp} vs sp {sp} on a tree of order {n}"))?;
            if n >= 3 {
                let r = tree_pd_equals_dom(&t, &lim()).map_err(|e| e.to_string())?;
                ensure(r.direct == r.characterization, || format!("characterization fails: {}", r.explanation))?;
                equal += usize::from(r.direct);
            }
            trees += 1;
        }
    }
    Ok(format!("{trees} trees, γ_P = sp on all, {equal} with γ_P = γ matching the characterization"))
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Multigraph {
    let tree = gen(Family::RandomTree { n, seed: rng.gen() });
    let mut edges: Vec<(Vertex, Vertex)> = tree.edges().map(|(e, _)| e).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(0.2) {
                edges.push((u, v));
            }
        }
    }
    Multigraph::from_edges(n, edges).unwrap()
}

fn product_bounds() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut fired = 0;
    for _ in 0..50 {
        let a = rng.gen_range(2..9);
        let b = rng.gen_range(2..=(40 / a).min(10));
        let g = if rng.gen_bool(0.5) {
            random_connected(&mut rng, a)
        } else {
            gen(Family::RandomTree { n: a, seed: rng.gen() })
        };
        let h = match rng.gen_range(0..3) {
            0 => gen(Family::Path(b)),
            1 => gen(Family::Star(b - 1)),
            _ => random_connected(&mut rng, b),
        };
        let r = pd_bounds(&g, &h, true, &lim()).map_err(|e| e.to_string())?;
        let x = r.exact.unwrap();
        ensure(r.lower() <= x && x <= r.upper(), || format!("sandwich fails: {r:?}"))?;
        for f in &r.equality_flags {
            ensure(f.value == x, || format!("{:?} predicts {} but exact is {x}", f.case, f.value))?;
            fired += 1;
        }
        if let Some(z) = r.zero_forcing_product {
            ensure(r.lower_vs <= z, || "v_s(G)v_s(H) exceeds Z(G □ H)".into())?;
        }
    }
    ensure(fired > 0, || "no equality case fired".into())?;

    let hyp: Vec<Multigraph> =
        (2..=10).flat_map(free_trees).filter(|t| pd(t) == domination_number(t, &lim()).unwrap().value).collect();
    let ds = gen(Family::DoubleStar(2, 2));
    let mut pairs = vec![(ds.clone(), ds)];
    while pairs.len() < 20 {
        let a = &hyp[rng.gen_range(0..hyp.len())];
        let b = &hyp[rng.gen_range(0..hyp.len())];
        if a.order() * b.order() <= 40 {
            pairs.push((a.clone(), b.clone()));
        }
    }
    for (i, (a, b)) in pairs.iter().enumerate() {
        match vizing_tree_check(a, b, &lim()).map_err(|e| e.to_string())? {
            VizingVerdict::Holds { bound, product, .. } => {
                ensure(product >= bound, || "holds with product below bound".into())?;
                ensure(i != 0 || (bound == 4 && product >= 4), || format!("double-star pair: bound {bound}"))?;
            }
            v => return Err(format!("tree pair {i}: {v:?}")),
        }
    }
    Ok(format!("50 sandwiches, {fired} equality cases matched, 20 tree pairs hold (double stars: bound 4)"))
}

fn sharpness(corpus: &[Multigraph]) -> Check {
    let mut sharp = 0;
    for g in corpus.iter().filter(|g| g.order() <= 24) {
        let c = construct_2ec(g).map_err(|e| e.to_string())?;
        if c.log.cycle_lengths().iter().all(|&l| l == 6) {
            let x = pd(g);
            ensure(6 * x == g.order(), || format!("order {} with 6-cycle factor has γ_P = {x}", g.order()))?;
            sharp += 1;
        }
    }
    ensure(sharp > 0, || "no instance with an all-6-cycle factor".into())?;
    Ok(format!("{sharp} instances with all 6-cycle factors attain n/6"))
}

fn main() -> ExitCode {
    let corpus = cfdf_corpus();
    let criteria: Vec<Criterion> = vec![
        ("exact values", Box::new(exact_values)),
        ("2-edge-connected construction", Box::new(|| two_edge_connected(&corpus))),
        ("general construction", Box::new(general_case)),
        ("single doubled pair", Box::new(doubled_pair)),
        ("observation engine", Box::new(observation_engine)),
        ("tree theorems", Box::new(tree_theorems)),
        ("product bounds", Box::new(product_bounds)),
        ("sharpness", Box::new(|| sharpness(&corpus))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result =
            std::panic::catch_unwind(std::panic::AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
