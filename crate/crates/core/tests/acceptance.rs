//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.
//!
//! Group comparisons are exact equality of canonical forms; counts are exact
//! integer equality. Runtime bounds are wall-clock limits per criterion.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tracehom::dimension::dimension_report;
use tracehom::fincat::{cube_fiber, theta, theta_power, union_fiber, FinCat};
use tracehom::graph::{clique_number, maximal_cliques, IndependenceGraph};
use tracehom::homology::{is_acyclic, nerve_homology, FGAbGroup};
use tracehom::limcoh::random::{random_diagram, random_poset, random_theta_power_diagram};
use tracehom::limcoh::{constant_diagram, lim_n, normalization_agreement};
use tracehom::syzygy::{
    build_resolution, ext_dimensions, global_dimension_report, verify_exactness, FieldSpec,
};
use tracehom::trace::{clique_polynomial, enumerate_traces, growth_coefficients, Trace};
use tracehom::Limits;

use common::*;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: tracehom::Error) -> String {
    e.to_string()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn clique_numbers() -> Outcome {
    let g = square_with_triangle();
    let omega = clique_number(&g);
    check(omega == 3, format!("omega = {omega}"))?;
    let cliques = maximal_cliques(&g).named(&g);
    let expected: Vec<Vec<String>> = [
        vec!["a", "b"],
        vec!["a", "d", "e"],
        vec!["b", "c"],
        vec!["c", "d"],
    ]
    .iter()
    .map(|c| c.iter().map(|s| s.to_string()).collect())
    .collect();
    check(cliques == expected, format!("maximal cliques {cliques:?}"))?;
    Ok("omega = 3, maximal cliques {a,b} {a,d,e} {b,c} {c,d}".into())
}

fn torus_homology() -> Outcome {
    let limits = Limits::default();
    let mut n4_time = Duration::ZERO;
    for n in 1..=4 {
        let start = Instant::now();
        let cat = theta_power(n).map_err(err)?;
        let h = nerve_homology(&cat, n + 1, &limits).map_err(err)?;
        for k in 0..=n + 1 {
            let g = h.group(k).map_err(err)?;
            let expected = FGAbGroup::free(if k <= n { binomial(n, k) } else { 0 });
            check(
                g == expected,
                format!("H_{k}(Theta^{n}) = {g}, expected {expected}"),
            )?;
        }
        if n == 4 {
            n4_time = start.elapsed();
        }
    }
    check(
        n4_time < Duration::from_secs(30),
        format!("Theta^4 took {n4_time:?}"),
    )?;
    Ok(format!(
        "H_k(Theta^n) = Z^C(n,k), n = 1..4; Theta^4 in {n4_time:.2?}"
    ))
}

fn derived_limits() -> Outcome {
    let limits = Limits::default();
    let groups = [
        FGAbGroup::free(1),
        FGAbGroup::cyclic(2),
        FGAbGroup::cyclic(6),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut random_checked = 0;
    for n in 1..=3 {
        let base = Arc::new(theta_power(n).map_err(err)?);
        for a in &groups {
            let f = constant_diagram(&base, a);
            let top = lim_n(&f, n, &limits).map_err(err)?;
            check(
                top == *a,
                format!("lim^{n} on Theta^{n} of constant {a} is {top}"),
            )?;
            for k in n + 1..=n + 2 {
                let g = lim_n(&f, k, &limits).map_err(err)?;
                check(
                    g.is_zero(),
                    format!("lim^{k} on Theta^{n} of constant {a} is {g}"),
                )?;
            }
        }
        for _ in 0..5 {
            let f = random_theta_power_diagram(n, &mut rng).map_err(err)?;
            for k in n + 1..=n + 2 {
                let g = lim_n(&f, k, &limits).map_err(err)?;
                check(
                    g.is_zero(),
                    format!("lim^{k} of a random diagram on Theta^{n} is {g}"),
                )?;
            }
            random_checked += 1;
        }
    }
    Ok(format!(
        "lim^n = A for A in Z, Z/2, Z/6 and n = 1..3; lim^k = 0 for k = n+1, n+2 on constants and {random_checked} random diagrams"
    ))
}

fn normalization() -> Outcome {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut bases: Vec<(String, Arc<FinCat>)> = vec![
        ("theta".into(), Arc::new(theta())),
        ("theta^2".into(), Arc::new(theta_power(2).map_err(err)?)),
    ];
    for i in 0..4 {
        bases.push((
            format!("poset {i}"),
            Arc::new(random_poset(4, 0.5, &mut rng).map_err(err)?),
        ));
    }
    let mut checked = 0;
    for (name, base) in &bases {
        check(
            !base.has_nonidentity_retraction(),
            format!("{name} has a retraction"),
        )?;
        for _ in 0..4 {
            let f = random_diagram(base, &mut rng).map_err(err)?;
            let r = normalization_agreement(&f, 3, &limits).map_err(err)?;
            check(r.full == r.normalized, format!("disagreement on {name}"))?;
            checked += 1;
        }
    }
    check(checked >= 20, format!("only {checked} diagrams"))?;
    Ok(format!(
        "full and normalized lim^0..3 agree on {checked} random diagrams over {} categories",
        bases.len()
    ))
}

fn fiber_acyclicity() -> Outcome {
    let limits = Limits::default();
    let start = Instant::now();
    let single = load_graph("single");
    for k in 0..=5 {
        let mu = Trace::parse(&single, &"a".repeat(k)).map_err(err)?;
        let fiber = cube_fiber(&single, &mu, &limits).map_err(err)?;
        check(
            fiber.objects.len() == 2 * k + 1,
            format!("Theta_a/a^{k} has {} objects", fiber.objects.len()),
        )?;
        let cert = is_acyclic(&fiber.category, 3, &limits).map_err(err)?;
        check(
            cert.acyclic,
            format!("Theta_a/a^{k} is not acyclic: {:?}", cert.groups),
        )?;
    }
    let mut fibers = 0;
    for name in ["cycle4", "square_with_triangle", "single", "free2", "plane"] {
        let g = load_graph(name);
        for len in 0..=3 {
            for mu in enumerate_traces(&g, len, limits.enumeration).map_err(err)? {
                let fiber = union_fiber(&g, &mu, &limits).map_err(err)?;
                let cert = is_acyclic(&fiber.category, 3, &limits).map_err(err)?;
                check(
                    cert.acyclic,
                    format!(
                        "fiber over {mu} on {name} is not acyclic: {:?}",
                        cert.groups
                    ),
                )?;
                fibers += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(120),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "Theta_a/a^k for k <= 5 and {fibers} union fibers over traces of length <= 3 acyclic through degree 3 in {elapsed:.2?}"
    ))
}

fn dimension_of_free_commutative_monoids() -> Outcome {
    let limits = Limits::default();
    let names = ["a", "b", "c"];
    for n in 1..=3 {
        let g = Arc::new(IndependenceGraph::complete(&names[..n]).map_err(err)?);
        let r = dimension_report(&g, 3, 3, &limits).map_err(err)?;
        check(
            r.lower.top_lim == FGAbGroup::free(1),
            format!("lim^{n} on Theta^{n} is {}", r.lower.top_lim),
        )?;
        check(r.lower.cube_closed, format!("cube not closed in N^{n}"))?;
        check(
            r.upper.cube_fibers.all_acyclic(),
            format!("cube fiber over {:?}", r.upper.cube_fibers.counterexample),
        )?;
        check(
            r.upper.union_fibers.all_acyclic(),
            format!("union fiber over {:?}", r.upper.union_fibers.counterexample),
        )?;
        check(
            r.dim == Some(n),
            format!("Dim N^{n} reported as {:?}", r.dim),
        )?;
    }
    Ok("Dim N^n = n for n = 1..3: lim^n = Z on the closed cube, fibers over traces of length <= 3 acyclic".into())
}

fn global_dimension() -> Outcome {
    let limits = Limits::default();
    let start = Instant::now();
    let c4 = c4();
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
        let r = build_resolution(&c4, field);
        let pieces = verify_exactness(&r, 6, &limits).map_err(err)?;
        check(
            pieces.iter().all(|p| p.is_exact()),
            format!("C4 over {field} not exact"),
        )?;
        check(
            ext_dimensions(&r).map_err(err)? == vec![1, 4, 4],
            "C4 ext dimensions",
        )?;
        let report = global_dimension_report(&c4, field, 6, &limits).map_err(err)?;
        check(
            report.gld == 2,
            format!("C4 over {field}: gld {}", report.gld),
        )?;
    }
    let triangle = square_with_triangle();
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
        let report = global_dimension_report(&triangle, field, 5, &limits).map_err(err)?;
        check(
            report.ext_dims == vec![1, 5, 6, 1],
            format!("ext dimensions {:?}", report.ext_dims),
        )?;
        check(
            report.gld == 3 && report.omega == 3,
            format!("gld {}", report.gld),
        )?;
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(60),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("C4: exact for m <= 6, ext [1,4,4], gld 2 over q0 and p2; square with triangle: ext [1,5,6,1], gld 3; {elapsed:.2?}"))
}

fn cross_module_consistency() -> Outcome {
    let limits = Limits::default();
    for (name, g) in test_graphs() {
        let growth = growth_coefficients(&g, 8);
        let c = clique_polynomial(&g);
        for n in 0..=8 {
            let count = enumerate_traces(&g, n, limits.enumeration)
                .map_err(err)?
                .len();
            check(
                BigInt::from(count) == growth[n],
                format!(
                    "{name}: {count} traces of length {n}, recurrence gives {}",
                    growth[n]
                ),
            )?;
            if n >= 1 {
                let s: BigInt = (0..c.len().min(n + 1))
                    .map(|k| BigInt::from(c[k]) * &growth[n - k])
                    .sum();
                check(
                    s == BigInt::from(0),
                    format!("{name}: clique polynomial relation fails at {n}"),
                )?;
            }
        }
        let pieces = verify_exactness(&build_resolution(&g, FieldSpec::Rationals), 5, &limits)
            .map_err(err)?;
        for p in pieces.iter().filter(|p| p.m >= 1) {
            check(
                p.euler == 0,
                format!("{name}: Euler characteristic {} at m = {}", p.euler, p.m),
            )?;
        }
    }
    Ok("trace counts = recurrence for n <= 8 on all test graphs; graded Euler characteristics vanish".into())
}

fn degenerate_inputs() -> Outcome {
    let limits = Limits::default();
    let empty = load_graph("empty");
    check(clique_number(&empty) == 0, "empty graph omega")?;
    let r = global_dimension_report(&empty, FieldSpec::Rationals, 4, &limits).map_err(err)?;
    check(
        r.gld == 0 && r.ext_dims == vec![1],
        format!("empty graph gld {}", r.gld),
    )?;
    let one = Trace::parse(&empty, "").map_err(err)?;
    let fiber = union_fiber(&empty, &one, &limits).map_err(err)?;
    check(
        is_acyclic(&fiber.category, 3, &limits)
            .map_err(err)?
            .acyclic,
        "empty graph fiber",
    )?;
    for name in ["single", "free2", "free3"] {
        let g = load_graph(name);
        check(clique_number(&g) == 1, format!("{name} omega"))?;
        let r = global_dimension_report(&g, FieldSpec::Prime(3), 4, &limits).map_err(err)?;
        check(r.gld == 1, format!("{name} gld {}", r.gld))?;
        check(
            r.ext_dims == vec![1, g.vertex_count()],
            format!("{name} ext {:?}", r.ext_dims),
        )?;
    }
    Ok("empty graph: omega 0, gld 0; free monoids on 1..3 letters: gld 1".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("clique numbers", clique_numbers),
        ("torus homology", torus_homology),
        ("derived limits on cubes", derived_limits),
        ("normalization", normalization),
        ("fiber acyclicity", fiber_acyclicity),
        ("dimension of N^n", dimension_of_free_commutative_monoids),
        ("syzygy and global dimension", global_dimension),
        ("cross-module consistency", cross_module_consistency),
        ("degenerate inputs", degenerate_inputs),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS  {name} ({elapsed:.2?}): {detail}",
                i + 1
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "criterion {}: FAIL  {name} ({elapsed:.2?}): {detail}",
                    i + 1
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
