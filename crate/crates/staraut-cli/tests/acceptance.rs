//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Every tolerance is exact (zero) by construction; the
//! oracles are brute-force table filters, independent re-derivations, or
//! byte comparisons.
//!
//! Run with `cargo test -p staraut-cli --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use std::process::Command;

use rand::SeedableRng;

use staraut::chu;
use staraut::groups::FinAbGroup;
use staraut::gvect::{self, double_dual_iso, GradedSpace};
use staraut::prof::{
    self, check_adjunction, FinCategory, FinFunctor, SetProfunctor,
};
use staraut::qforms::{
    self, enumerate_qf, enumerate_wqf, enumerate_wrqf, enumerate_wsqf, power_identity_check,
    power_identity_check_symmetric, wrqf_class_count, wrqf_to_wsqf, wsqf_class_count,
    wsqf_to_wrqf,
};
use staraut::ribbon::{build_from_wrqf, extract_wrqf, structure_class_count};

fn z(n: i64) -> FinAbGroup {
    FinAbGroup::cyclic(n)
}

fn product(orders: &[i64]) -> FinAbGroup {
    FinAbGroup::new(orders.to_vec()).unwrap()
}

fn pass(criterion: &str, detail: &str) {
    println!("[PASS] {criterion}: {detail}");
}

// ------------------------------------------------------------ criterion 1

/// Independent oracle: enumerate all value tables q: Z_n -> mu_{n^2} in
/// exponent coordinates and filter by bilinearity of the associated beta.
fn brute_force_wqf_count(n: usize) -> usize {
    let modulus = (n * n) as i64;
    let mut q = vec![0i64; n];
    let mut count = 0usize;
    loop {
        if beta_bilinear(&q, n, modulus) {
            count += 1;
        }
        let mut i = n;
        let done = loop {
            if i <= 1 {
                break true;
            }
            i -= 1;
            q[i] += 1;
            if q[i] < modulus {
                break false;
            }
            q[i] = 0;
        };
        if done {
            return count;
        }
    }
}

fn beta_bilinear(q: &[i64], n: usize, modulus: i64) -> bool {
    let beta = |a: usize, b: usize| (q[(a + b) % n] - q[a] - q[b]).rem_euclid(modulus);
    for a in 0..n {
        for b in 0..n {
            let ab = (a + b) % n;
            for c in 0..n {
                if beta(ab, c) != (beta(a, c) + beta(b, c)).rem_euclid(modulus) {
                    return false;
                }
            }
        }
    }
    true
}

/// Same oracle restricted to symmetric tables `q[k] = q[n-k]`.
fn brute_force_qf_count(n: usize) -> usize {
    let modulus = (n * n) as i64;
    let free = n / 2;
    let mut picks = vec![0i64; free];
    let mut count = 0usize;
    loop {
        let mut q = vec![0i64; n];
        for k in 1..=free {
            q[k] = picks[k - 1];
            q[n - k] = picks[k - 1];
        }
        if beta_bilinear(&q, n, modulus) {
            count += 1;
        }
        let mut i = free;
        let done = loop {
            if i == 0 {
                break true;
            }
            i -= 1;
            picks[i] += 1;
            if picks[i] < modulus {
                break false;
            }
            picks[i] = 0;
        };
        if done {
            return count;
        }
    }
}

#[test]
fn criterion_1_enumeration_counts() {
    for n in 2..=5usize {
        let generated = enumerate_wqf(&z(n as i64)).unwrap().len();
        let brute = brute_force_wqf_count(n);
        assert_eq!(generated, n * n, "|WQF(Z_{n})| from generators");
        assert_eq!(brute, n * n, "|WQF(Z_{n})| from brute force");
    }
    for n in 2..=6usize {
        let expected = if n % 2 == 1 { n } else { 2 * n };
        let generated = enumerate_qf(&z(n as i64)).unwrap().len();
        let brute = brute_force_qf_count(n);
        assert_eq!(generated, expected, "|QF(Z_{n})| from generators");
        assert_eq!(brute, expected, "|QF(Z_{n})| from brute force");
    }
    pass(
        "criterion 1",
        "|WQF(Z_n)| = n^2 (n=2..5) and |QF(Z_n)| = n / 2n (n=2..6), generator and brute-force counts agree",
    );
}

// ------------------------------------------------------------ criterion 2

fn criterion_groups() -> Vec<FinAbGroup> {
    vec![z(2), z(3), z(4), z(5), z(6), product(&[2, 2]), product(&[2, 4]), product(&[3, 3])]
}

#[test]
fn criterion_2_decomposition_theorem() {
    let mut total = 0usize;
    for g in criterion_groups() {
        for q in enumerate_wqf(&g).unwrap() {
            let (qt, eta) = qforms::decompose(&q).unwrap();
            assert_eq!(qt.weak().mul_character(&eta), q, "q = qtilde * eta");
            assert!(qt.weak().is_qform(), "qtilde symmetric and weak");
            for a in g.all_elements() {
                for b in g.all_elements() {
                    assert_eq!(q.beta(&a, &b), qt.beta(&a, &b), "beta_q = beta_qtilde");
                }
            }
            total += 1;
        }
    }
    pass("criterion 2", &format!("decomposition exact and exhaustive over {total} weak forms"));
}

// ------------------------------------------------------------ criterion 3

#[test]
fn criterion_3_power_identities() {
    let mut checks = 0usize;
    for g in criterion_groups() {
        let bound = 2 * g.exponent();
        for q in enumerate_wqf(&g).unwrap() {
            for x in g.all_elements() {
                for k in 0..=bound {
                    assert!(power_identity_check(&q, &x, k));
                    checks += 1;
                }
            }
        }
        for d in enumerate_wsqf(&g).unwrap() {
            for x in g.all_elements() {
                for k in 0..=bound {
                    assert!(power_identity_check_symmetric(d.q(), d.g0(), &x, k));
                    checks += 1;
                }
            }
        }
    }
    pass("criterion 3", &format!("power identities hold exactly ({checks} evaluations)"));
}

// ------------------------------------------------------------ criterion 4

#[test]
fn criterion_4_wrqf_wsqf_bijection() {
    for g in [z(3), z(5), z(7), product(&[3, 3])] {
        let wsqf = enumerate_wsqf(&g).unwrap();
        let wrqf = enumerate_wrqf(&g).unwrap();
        for d in &wsqf {
            let r = wsqf_to_wrqf(d).unwrap();
            assert_eq!(&wrqf_to_wsqf(&r).unwrap(), d, "wsqf -> wrqf -> wsqf is the identity");
        }
        for d in &wrqf {
            let s = wrqf_to_wsqf(d).unwrap();
            assert_eq!(&wsqf_to_wrqf(&s).unwrap(), d, "wrqf -> wsqf -> wrqf is the identity");
        }
        assert_eq!(
            wsqf_class_count(&wsqf).unwrap(),
            wrqf_class_count(&wrqf).unwrap(),
            "class-level orbit counts agree"
        );
    }
    pass("criterion 4", "datum-level round trips exact on Z3, Z5, Z7, Z3+Z3; orbit counts agree");
}

// ------------------------------------------------------------ criterion 5

#[test]
fn criterion_5_weak_ribbon_theorem() {
    // Forward: every representable datum builds a coherent structure.
    let mut built = 0usize;
    for g in [z(2), z(3), z(4), z(5)] {
        for d in enumerate_wrqf(&g).unwrap() {
            let s = build_from_wrqf(&d).unwrap();
            let report = s.check_all();
            assert!(report.pentagon && report.triangle, "pentagon/triangle");
            assert!(report.hexagons, "hexagons");
            assert!(report.twist, "twist");
            assert!(report.ribbon, "ribbon w.r.t. -2 g0");
            built += 1;
        }
    }
    // Converse: extract . build is the identity on data for odd orders.
    for g in [z(3), z(5)] {
        for d in enumerate_wrqf(&g).unwrap() {
            let s = build_from_wrqf(&d).unwrap();
            assert_eq!(extract_wrqf(&s).unwrap(), d, "extract(build(d)) = d");
        }
    }
    // Class counts match under structure equivalence on Z3.
    let g = z(3);
    let data = enumerate_wrqf(&g).unwrap();
    let structures: Vec<_> = data.iter().map(|d| build_from_wrqf(d).unwrap()).collect();
    assert_eq!(
        wrqf_class_count(&data).unwrap(),
        structure_class_count(&structures).unwrap(),
        "class counts on Z3"
    );
    pass(
        "criterion 5",
        &format!("{built} structures pass all five checks; extract.build = id (odd); Z3 class counts match"),
    );
}

// ------------------------------------------------------------ criterion 6

fn all_dims(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for v in &out {
            for d in 0..=max {
                let mut w = v.clone();
                w.push(d);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Spaces with support of bounded size, for groups where the full
/// dimension-vector sweep is infeasible.
fn supported_dims(len: usize, max: usize, support: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    // support 1
    for pos in 0..len {
        for d in 1..=max {
            let mut v = vec![0; len];
            v[pos] = d;
            out.push(v);
        }
    }
    if support >= 2 {
        for p1 in 0..len {
            for p2 in (p1 + 1)..len {
                for d1 in 1..=max {
                    for d2 in 1..=max {
                        let mut v = vec![0; len];
                        v[p1] = d1;
                        v[p2] = d2;
                        out.push(v);
                    }
                }
            }
        }
    }
    out.push(vec![0; len]);
    out
}

#[test]
fn criterion_6_graded_identities() {
    let groups = vec![
        FinAbGroup::trivial(),
        z(2),
        z(3),
        z(4),
        z(5),
        z(6),
        product(&[2, 2]),
        product(&[2, 3]),
    ];
    let mut unary = 0usize;
    let mut binary = 0usize;
    let mut roundtrips = 0usize;

    for g in &groups {
        let n = g.order() as usize;
        let elements = g.all_elements();
        // Unary identities: exhaustive over every dims vector <= 3.
        for dims in all_dims(n, 3) {
            let v = GradedSpace::new(g.clone(), dims).unwrap();
            for g0 in &elements {
                let dual = v.dual_g0(g0);
                for x in &elements {
                    assert_eq!(dual.dim_at(x), v.dim_at(&g.sub(g0, x)), "dual reindexing");
                }
                let iso = double_dual_iso(&v, g0);
                assert!(iso.is_invertible(), "double dual invertible");
                assert_eq!(iso.target().dims(), v.dims(), "double dual dimensions");
                for g1 in &elements {
                    assert!(gvect::double_dual_dims_check(&v, g0, g1));
                }
                unary += 1;
            }
        }
        // Binary identities: exhaustive for |G| <= 3, support-bounded
        // sweeps above that (the full pair sweep is quartic in 4^|G|).
        let pool = if n <= 3 { all_dims(n, 3) } else { supported_dims(n, 3, 2) };
        for dv in &pool {
            let v = GradedSpace::new(g.clone(), dv.clone()).unwrap();
            for dw in &pool {
                let w = GradedSpace::new(g.clone(), dw.clone()).unwrap();
                let t = v.tensor(&w).unwrap();
                for x in &elements {
                    let conv: usize =
                        elements.iter().map(|h| v.dim_at(h) * w.dim_at(&g.sub(x, h))).sum();
                    assert_eq!(t.dim_at(x), conv, "tensor convolution");
                }
                let g0 = &elements[(dv.len() + dw.iter().sum::<usize>()) % elements.len()];
                let tg = v.tensor_g0(&w, g0).unwrap();
                for x in &elements {
                    assert_eq!(tg.dim_at(x), t.dim_at(&g.add(x, g0)), "shift identity");
                }
                binary += 1;
            }
        }
        // Curry/uncurry and the adjunction: seeded sweep per group plus
        // the library's own verification suite.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6 + g.order() as u64);
        for _ in 0..6 {
            let u = gvect::random_space(&mut rng, g, 3);
            let v = gvect::random_space(&mut rng, g, 3);
            let w = gvect::random_space(&mut rng, g, 3);
            let uv = u.tensor(&v).unwrap();
            let f = gvect::random_map0(&mut rng, &uv, &w);
            let ft = gvect::curry(&f, &u, &v).unwrap();
            let back = gvect::uncurry(&ft, &v, &w).unwrap();
            assert_eq!(back.blocks(), f.blocks(), "uncurry(curry(f)) = f exactly");
            let again = gvect::curry(&back, &u, &v).unwrap();
            assert_eq!(again.blocks(), ft.blocks(), "curry(uncurry(ft)) = ft exactly");
            roundtrips += 1;
        }
        for r in gvect::verify_identities(g, 99, 3, 4).unwrap() {
            assert!(r.pass, "gvect identity {} on {:?}", r.name, g.cyclic_orders());
        }
        // Degreewise identity of the adjunction on all simples.
        for a in &elements {
            for b in &elements {
                for g0 in &elements {
                    let x = GradedSpace::simple(g.clone(), a);
                    let y = GradedSpace::simple(g.clone(), b);
                    let bij = gvect::star_adjunction_iso(&x, &y, g0).unwrap();
                    let dim = bij.forward.rows();
                    assert_eq!(dim, usize::from(g.add(a, b) == *g0));
                    let id = staraut::RationalMatrix::identity(dim);
                    assert_eq!(bij.forward.mul(&bij.backward), id);
                }
            }
        }
    }
    pass(
        "criterion 6",
        &format!("graded identities: {unary} unary cases, {binary} pairs, {roundtrips} curry round trips, all exact"),
    );
}

// ------------------------------------------------------------ criterion 7

#[test]
fn criterion_7_chu_identities() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20_26);
    let pairs: Vec<chu::ChuPair> = (0..100).map(|_| chu::random_valid_pair(&mut rng, 3)).collect();
    for p in &pairs {
        assert_eq!(&p.dual().dual(), p, "dual involution exact");
        assert!(chu::internal_hom(p, &chu::ChuPair::unit()).unwrap().is_valid());
    }
    for i in 0..100 {
        let u = &pairs[i];
        let v = &pairs[(i + 7) % 100];
        let w = &pairs[(i + 13) % 100];
        let checks = chu::verify_identities(u, v, w, &mut rng).unwrap();
        for c in &checks {
            assert!(c.pass, "chu identity {} failed on triple {i}: {:?}", c.name, c.detail);
        }
    }
    pass(
        "criterion 7",
        "dual involution, hom identities, unit/symmetry/adjunction certified on 100 seeded pairs",
    );
}

// ------------------------------------------------------------ criterion 8

fn test_categories() -> Vec<FinCategory> {
    vec![
        FinCategory::one_object_group(&FinAbGroup::cyclic(2)),
        FinCategory::poset_chain(3),
        FinCategory::three_object_endo(),
    ]
}

#[test]
fn criterion_8_profunctor_calculus() {
    for cat in test_categories() {
        let idp = SetProfunctor::identity_prof(&cat);
        assert!(prof::identity_collapse_check(&idp).unwrap(), "hom coend collapse bijection");
        assert!(prof::coend_order_independent(&idp).unwrap(), "quotient determinism");
        assert!(prof::associativity_check(&idp, &idp, &idp).unwrap(), "associativity");

        let idf = FinFunctor::identity(&cat);
        let report = check_adjunction(&cat, &cat, &idf).unwrap();
        assert!(report.all_pass(), "adjunction triangles: {:?}", report.failures);

        let brute = prof::natural_transformations_brute(&cat, &cat, &idf, &idf).len();
        let via_end = prof::nat_count_via_end(&cat, &cat, &idf, &idf).unwrap();
        assert_eq!(brute, via_end, "nat count");
    }

    // Non-identity functors: a group endomorphism, a poset inclusion, and
    // the endo-collapse on the three-object category.
    let z3 = FinCategory::one_object_group(&FinAbGroup::cyclic(3));
    let doubling =
        FinFunctor::new(&z3, &z3, vec![0], vec![vec![vec![0, 2, 1]]]).unwrap();
    let report = check_adjunction(&z3, &z3, &doubling).unwrap();
    assert!(report.all_pass(), "{:?}", report.failures);
    let idf = FinFunctor::identity(&z3);
    assert_eq!(
        prof::natural_transformations_brute(&z3, &z3, &idf, &doubling).len(),
        prof::nat_count_via_end(&z3, &z3, &idf, &doubling).unwrap()
    );

    let single = FinCategory::poset_chain(1);
    let chain = FinCategory::poset_chain(3);
    let incl = FinFunctor::new(&single, &chain, vec![1], vec![vec![vec![0]]]).unwrap();
    let report = check_adjunction(&single, &chain, &incl).unwrap();
    assert!(report.all_pass(), "{:?}", report.failures);

    let endo = FinCategory::three_object_endo();
    // Collapse s and t to identities; u and u' both map to u.
    let collapse = FinFunctor::new(
        &endo,
        &endo,
        vec![0, 1, 2],
        vec![
            vec![vec![0, 0], vec![0, 0], vec![0]],
            vec![vec![], vec![0, 0], vec![0]],
            vec![vec![], vec![], vec![0]],
        ],
    )
    .unwrap();
    let report = check_adjunction(&endo, &endo, &collapse).unwrap();
    assert!(report.all_pass(), "{:?}", report.failures);
    let idf = FinFunctor::identity(&endo);
    assert_eq!(
        prof::natural_transformations_brute(&endo, &endo, &idf, &collapse).len(),
        prof::nat_count_via_end(&endo, &endo, &idf, &collapse).unwrap()
    );

    pass(
        "criterion 8",
        "coend collapse, adjunction triangles and nat counts pass on all three test categories",
    );
}

// ------------------------------------------------------------ criterion 9

#[test]
fn criterion_9_cli_determinism() {
    let bin = env!("CARGO_BIN_EXE_staraut");
    let runs: Vec<Vec<&str>> = vec![
        vec!["qf", "enumerate", "--group", r#"{"cyclic_orders":[4]}"#],
        vec!["qf", "classify", "--group", r#"{"cyclic_orders":[3]}"#],
        vec![
            "qf",
            "check",
            "--form",
            r#"{"group":{"cyclic_orders":[2]},"values":[[[0],{"num":0,"den":1}],[[1],{"num":1,"den":4}]]}"#,
        ],
        vec![
            "cocycle",
            "from-qform",
            "--form",
            r#"{"group":{"cyclic_orders":[2]},"values":[[[0],{"num":0,"den":1}],[[1],{"num":1,"den":4}]]}"#,
        ],
        vec!["ribbon", "enumerate", "--group", r#"{"cyclic_orders":[3]}"#],
        vec!["gvect", "verify", "--group", r#"{"cyclic_orders":[4]}"#, "--seed", "11", "--max-dim", "3"],
        vec!["chu", "verify", "--seed", "7", "--max-dim", "3", "--count", "6"],
        vec!["prof", "demo", "--category", "poset3"],
    ];
    for args in &runs {
        let run = || {
            let output = Command::new(bin).args(args).output().expect("binary runs");
            (output.status.code(), output.stdout)
        };
        let (code1, out1) = run();
        let (code2, out2) = run();
        assert_eq!(code1, code2, "exit codes differ for {args:?}");
        assert_eq!(code1, Some(0), "command failed: {args:?}");
        assert_eq!(out1, out2, "outputs differ for {args:?}");
        assert!(!out1.is_empty());
        serde_json::from_slice::<serde_json::Value>(&out1).expect("output is valid JSON");
    }
    pass("criterion 9", &format!("{} CLI commands byte-identical across two runs", runs.len()));
}
