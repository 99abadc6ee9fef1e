//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its headline numbers (run with `--nocapture` to see them all).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::time::Instant;
use subpower::classify::{
    classify_general, classify_rees, classify_rees_identity, find_nphard_triple,
    hardness_idempotents, ComplexityClass,
};
use subpower::reduce::{q3sat_to_smp, sat_to_smp, CnfFormula, Q3SatFormula};
use subpower::{
    catalog, check_witness, compress_one_block_witness, shorten_word, shortening_bound,
    solve_closure, solve_one_block, words_equivalent_rees, FiniteSemigroup, ReesStructure,
    SmpInstance, Witness,
};

fn random_one_block_matrix(rng: &mut ChaCha8Rng, max_dim: usize) -> ReesStructure {
    let rows = rng.random_range(1..=max_dim);
    let cols = rng.random_range(1..=max_dim);
    let delta: Vec<bool> = (0..rows).map(|_| rng.random_bool(0.7)).collect();
    let j: Vec<bool> = (0..cols).map(|_| rng.random_bool(0.7)).collect();
    let matrix: Vec<Vec<u8>> = (0..rows)
        .map(|r| (0..cols).map(|c| (delta[r] && j[c]) as u8).collect())
        .collect();
    ReesStructure::new(matrix, false).expect("valid matrix")
}

fn random_tuple(rng: &mut ChaCha8Rng, size: usize, n: usize) -> Vec<usize> {
    (0..n).map(|_| rng.random_range(0..size)).collect()
}

fn product_of(sg: &FiniteSemigroup, gens: &[Vec<usize>], word: &[usize]) -> Vec<usize> {
    let mut acc = gens[word[0]].clone();
    for &i in &word[1..] {
        for (c, slot) in acc.iter_mut().enumerate() {
            *slot = sg.mul(*slot, gens[i][c]);
        }
    }
    acc
}

#[test]
fn criterion_1_one_block_oracle_equivalence() {
    let start = Instant::now();
    let mut checked = 0usize;

    // exhaustive: every one-block 2×2 matrix, n ≤ 2, generator sets of
    // size ≤ 2, every target
    for bits in 0..16u32 {
        let matrix: Vec<Vec<u8>> = (0..2)
            .map(|r| (0..2).map(|c| (bits >> (r * 2 + c) & 1) as u8).collect())
            .collect();
        let rees = ReesStructure::new(matrix, false).unwrap();
        if rees.one_block().is_none() {
            continue;
        }
        let sg = rees.build().unwrap();
        for n in 1..=2usize {
            let tuples: Vec<Vec<usize>> = (0..sg.size().pow(n as u32))
                .map(|code| (0..n).map(|c| code / sg.size().pow((n - 1 - c) as u32) % sg.size()).collect())
                .collect();
            let mut gen_sets: Vec<Vec<Vec<usize>>> =
                tuples.iter().map(|t| vec![t.clone()]).collect();
            for i in 0..tuples.len() {
                for jj in i + 1..tuples.len() {
                    gen_sets.push(vec![tuples[i].clone(), tuples[jj].clone()]);
                }
            }
            for gens in &gen_sets {
                for target in &tuples {
                    let inst =
                        SmpInstance::from_coords(sg.clone(), gens, target.clone()).unwrap();
                    let fast = solve_one_block(&inst, &rees).unwrap();
                    let slow = solve_closure(&inst, 1_000_000).unwrap().member;
                    assert_eq!(fast, slow, "disagreement on {gens:?} -> {target:?}");
                    checked += 1;
                }
            }
        }
    }
    let exhaustive = checked;

    // randomized: larger matrices, powers, and generator sets
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut random_members = 0usize;
    for _ in 0..1000 {
        let rees = random_one_block_matrix(&mut rng, 3);
        let sg = rees.build().unwrap();
        let n = rng.random_range(1..=4);
        let k = rng.random_range(1..=4);
        let gens: Vec<Vec<usize>> = (0..k).map(|_| random_tuple(&mut rng, sg.size(), n)).collect();
        let target = if rng.random_bool(0.5) {
            random_tuple(&mut rng, sg.size(), n)
        } else {
            let len = rng.random_range(1..=6);
            let word: Vec<usize> = (0..len).map(|_| rng.random_range(0..k)).collect();
            product_of(&sg, &gens, &word)
        };
        let inst = SmpInstance::from_coords(sg.clone(), &gens, target).unwrap();
        let fast = solve_one_block(&inst, &rees).unwrap();
        let slow = solve_closure(&inst, 1_000_000).unwrap().member;
        assert_eq!(fast, slow);
        random_members += slow as usize;
    }
    assert!(random_members > 100, "member/non-member mix degenerated");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "criterion 1 over time: {elapsed:?}");
    println!(
        "acceptance 1 (one-block solver vs closure): PASS — {exhaustive} exhaustive + 1000 random instances, 100% agreement in {elapsed:.2?}"
    );
}

/// All clauses of size ≤ 2 over literals ±1..=±k.
fn clause_pool(k: i32) -> Vec<Vec<i32>> {
    let literals: Vec<i32> = (1..=k).flat_map(|v| [v, -v]).collect();
    let mut pool: Vec<Vec<i32>> = literals.iter().map(|&l| vec![l]).collect();
    for i in 0..literals.len() {
        for j in i + 1..literals.len() {
            pool.push(vec![literals[i], literals[j]]);
        }
    }
    pool
}

fn covers_all_vars(clauses: &[&Vec<i32>], k: usize) -> bool {
    let vars: HashSet<usize> = clauses
        .iter()
        .flat_map(|c| c.iter().map(|l| l.unsigned_abs() as usize))
        .collect();
    vars.len() == k
}

#[test]
fn criterion_2_sat_reduction_equivalence() {
    let start = Instant::now();
    let b2 = catalog::entry("brandt_b2").unwrap().semigroup;
    let triple = (0, 1, 3); // ([1,1], [1,2], [2,2])
    let mut formulas = 0usize;
    let mut satisfiable = 0usize;

    for k in 1..=3usize {
        let pool = clause_pool(k as i32);
        let mut formula_sets: Vec<Vec<Vec<i32>>> = Vec::new();
        for c in &pool {
            if covers_all_vars(&[c], k) {
                formula_sets.push(vec![c.clone()]);
            }
        }
        // clause lists are ordered, so enumerate ordered pairs
        for c1 in &pool {
            for c2 in &pool {
                if covers_all_vars(&[c1, c2], k) {
                    formula_sets.push(vec![c1.clone(), c2.clone()]);
                }
            }
        }
        for clauses in formula_sets {
            let m = clauses.len();
            let cnf = CnfFormula::new(k, clauses).unwrap();
            let sat = cnf.brute_force_sat().is_some();
            let inst = sat_to_smp(&b2, triple, &cnf).unwrap();
            assert_eq!(inst.generators().len(), 2 * k, "generator count");
            assert_eq!(inst.n(), k + m, "tuple length");
            let member = solve_closure(&inst, 1_000_000).unwrap().member;
            assert_eq!(sat, member, "mismatch on {:?}", cnf.clauses());
            formulas += 1;
            satisfiable += sat as usize;
        }
    }
    assert!(formulas >= 200, "expected several hundred formulas, got {formulas}");
    assert!(satisfiable > 0 && satisfiable < formulas);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "criterion 2 over time: {elapsed:?}");
    println!(
        "acceptance 2 (SAT reduction equivalence): PASS — {formulas} formulas ({satisfiable} satisfiable), zero mismatches in {elapsed:.2?}"
    );
}

#[test]
fn criterion_3_q3sat_reduction_equivalence() {
    let start = Instant::now();
    let entry = catalog::entry("brandt_b2_1").unwrap();
    let sg = entry.semigroup;
    let triple = entry.pspace_triple.unwrap();

    // all multisets of three literals over x₁, ¬x₁, y₁, ¬y₁
    let literals = [1i32, -1, 2, -2];
    let mut clauses: Vec<[i32; 3]> = Vec::new();
    for a in 0..literals.len() {
        for b in a..literals.len() {
            for c in b..literals.len() {
                clauses.push([literals[a], literals[b], literals[c]]);
            }
        }
    }
    assert_eq!(clauses.len(), 20);

    let mut formulas: Vec<Vec<[i32; 3]>> = clauses.iter().map(|c| vec![*c]).collect();
    for i in 0..clauses.len() {
        for j in i..clauses.len() {
            formulas.push(vec![clauses[i], clauses[j]]);
        }
    }

    let mut true_count = 0usize;
    let mut max_closure = 0usize;
    let total = formulas.len();
    for clause_list in formulas {
        let m = clause_list.len();
        let f = Q3SatFormula::new(1, clause_list).unwrap();
        let truth = f.eval();
        let inst = q3sat_to_smp(&sg, triple, &f, false).unwrap();
        assert_eq!(inst.generators().len(), 1 + 5 + 3 * m, "generator count");
        assert_eq!(inst.n(), 3 + m + 1, "tuple length");
        let report = solve_closure(&inst, 1_000_000).unwrap();
        assert_eq!(truth, report.member, "mismatch on {:?}", f.clauses());
        if truth {
            // the winning strategy unrolls into an explicit witness
            let strategy = f.find_strategy().expect("true formula has a strategy");
            let w = Witness {
                word: subpower::reduce::q3sat_witness_word(&f, &strategy),
            };
            assert!(check_witness(&inst, &w).unwrap(), "strategy witness failed");
        }
        max_closure = max_closure.max(report.closure_size);
        true_count += truth as usize;
    }
    assert!(max_closure <= 6usize.pow(6), "state space exceeded 6^6");
    assert!(true_count > 0 && true_count < total);

    // spot instance with two quantifier pairs
    let f = Q3SatFormula::new(2, vec![[3, 3, 3]]).unwrap(); // ∃y₁ always
    assert!(f.eval());
    let inst = q3sat_to_smp(&sg, triple, &f, false).unwrap();
    let report = solve_closure(&inst, 20_000_000).unwrap();
    assert!(report.member);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "criterion 3 over time: {elapsed:?}");
    println!(
        "acceptance 3 (Q3SAT reduction equivalence): PASS — {total} formulas ({true_count} true, max closure {max_closure}) + n=2 spot instance in {elapsed:.2?}"
    );
}

#[test]
fn criterion_4_word_shortening() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let b2 = catalog::entry("brandt_b2").unwrap().semigroup;
    let a2 = catalog::entry("a2").unwrap().semigroup;

    let eval = |sg: &FiniteSemigroup, word: &[usize], assign: &[usize]| -> usize {
        word.iter()
            .map(|&l| assign[l])
            .reduce(|a, b| sg.mul(a, b))
            .unwrap()
    };

    for _ in 0..1000 {
        let k = rng.random_range(1..=4);
        let len = rng.random_range(1..=60);
        let word: Vec<usize> = (0..len).map(|_| rng.random_range(0..k)).collect();
        let short = shorten_word(&word);
        assert!(short.len() <= shortening_bound(k), "bound violated");
        assert!(words_equivalent_rees(&word, &short), "edge sets changed");
        for sg in [&b2, &a2] {
            for _ in 0..100 {
                let assign: Vec<usize> = (0..k).map(|_| rng.random_range(0..sg.size())).collect();
                assert_eq!(
                    eval(sg, &word, &assign),
                    eval(sg, &short, &assign),
                    "evaluations diverged"
                );
            }
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "criterion 4 over time: {elapsed:?}");
    println!(
        "acceptance 4 (word shortening): PASS — 1000 words, bound + equivalence + 200 evaluations each, zero violations in {elapsed:.2?}"
    );
}

#[test]
fn criterion_5_witness_compression() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut done = 0usize;
    while done < 500 {
        let without_id = random_one_block_matrix(&mut rng, 3);
        let rees = ReesStructure::new(without_id.matrix_rows(), true).unwrap();
        let sg = rees.build().unwrap();
        let one = sg.identity().unwrap();
        let n = rng.random_range(1..=4);
        let k = rng.random_range(1..=4);
        let gens: Vec<Vec<usize>> = (0..k).map(|_| random_tuple(&mut rng, sg.size(), n)).collect();
        let len = rng.random_range(2..=12);
        let word: Vec<usize> = (0..len).map(|_| rng.random_range(0..k)).collect();
        let target = product_of(&sg, &gens, &word);
        if target.iter().all(|&c| c == one) {
            continue; // the compression contract excludes all-identity targets
        }
        let inst = SmpInstance::from_coords(sg, &gens, target).unwrap();
        let witness = Witness { word };
        assert!(check_witness(&inst, &witness).unwrap());
        let compressed = compress_one_block_witness(&inst, &rees, &witness).unwrap();
        assert!(
            compressed.word.len() <= 2 * n,
            "compressed witness too long: {} > {}",
            compressed.word.len(),
            2 * n
        );
        assert!(check_witness(&inst, &compressed).unwrap(), "compression broke the witness");
        done += 1;
    }

    let elapsed = start.elapsed();
    println!(
        "acceptance 5 (witness compression): PASS — 500 member instances, all compressed to ≤ 2n and re-checked in {elapsed:.2?}"
    );
}

#[test]
fn criterion_6_classification_table() {
    let start = Instant::now();
    let rees = |m: Vec<Vec<u8>>, id: bool| ReesStructure::new(m, id).unwrap();

    // dichotomy
    assert_eq!(
        classify_rees(&rees(vec![vec![1, 0], vec![0, 1]], false)).unwrap().class,
        ComplexityClass::NpComplete
    );
    assert_eq!(
        classify_rees(&rees(vec![vec![1, 1], vec![1, 0]], false)).unwrap().class,
        ComplexityClass::NpComplete
    );
    assert_eq!(
        classify_rees(&rees(vec![vec![1, 1], vec![1, 1]], false)).unwrap().class,
        ComplexityClass::Ptime
    );

    // trichotomy
    assert_eq!(
        classify_rees_identity(&rees(vec![vec![1, 0], vec![0, 1]], true)).unwrap().class,
        ComplexityClass::PspaceComplete
    );
    assert_eq!(
        classify_rees_identity(&rees(vec![vec![1, 1], vec![1, 0]], true)).unwrap().class,
        ComplexityClass::PspaceComplete
    );
    assert_eq!(
        classify_rees_identity(&rees(vec![vec![1, 1], vec![1, 1]], true)).unwrap().class,
        ComplexityClass::Ptime
    );
    assert_eq!(
        classify_rees_identity(&rees(vec![vec![1, 0], vec![0, 0]], true)).unwrap().class,
        ComplexityClass::NpComplete
    );

    // general tables
    for name in ["full_transformation:3", "symmetric_inverse:2", "matrix_semigroup:2"] {
        let sg = catalog::entry(name).unwrap().semigroup;
        assert_eq!(
            classify_general(&sg).class,
            ComplexityClass::PspaceComplete,
            "{name}"
        );
    }
    let z2 = FiniteSemigroup::new(&[vec![0, 1], vec![1, 0]]).unwrap();
    assert_eq!(classify_general(&z2).class, ComplexityClass::InPspaceUnknown);

    let elapsed = start.elapsed();
    println!(
        "acceptance 6 (classification table): PASS — 11 verdicts exactly as expected in {elapsed:.2?}"
    );
}

#[test]
fn criterion_7_structural_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let names = catalog::standard_names();
    let mut product_checks = 0usize;

    for name in &names {
        let sg = catalog::entry(name).unwrap().semigroup;
        sg.verify_associativity().unwrap_or_else(|e| panic!("{name}: {e}"));
        let greens = sg.greens();

        // H = L ∩ R
        for x in 0..sg.size() {
            for y in 0..sg.size() {
                assert_eq!(
                    greens.same_h(x, y),
                    greens.same_r(x, y) && greens.same_l(x, y),
                    "{name}: H mismatch at ({x},{y})"
                );
            }
        }

        // D = J, with D computed as the join of R and L
        let mut pair_exists =
            vec![vec![false; greens.l_class_count()]; greens.r_class_count()];
        for z in 0..sg.size() {
            pair_exists[greens.r_class(z)][greens.l_class(z)] = true;
        }
        for x in 0..sg.size() {
            for y in 0..sg.size() {
                let d = pair_exists[greens.r_class(x)][greens.l_class(y)];
                assert_eq!(d, greens.same_j(x, y), "{name}: D≠J at ({x},{y})");
            }
        }

        // the J-order respects multiplication
        for a in 0..sg.size() {
            for b in 0..sg.size() {
                let ab = sg.mul(a, b);
                assert!(greens.j_le(ab, a) && greens.j_le(ab, b), "{name}: order violation");
            }
        }

        // group test against the independent power-iteration oracle
        for x in 0..sg.size() {
            let mut cur = x;
            let mut returns = false;
            for _ in 0..sg.size() {
                cur = sg.mul(cur, x);
                if cur == x {
                    returns = true;
                    break;
                }
            }
            assert_eq!(
                sg.generates_group(&greens, x),
                returns,
                "{name}: group test disagrees at {x}"
            );
        }

        // the idempotent power is the unique idempotent of ⟨x⟩
        for x in 0..sg.size() {
            let p = sg.idempotent_power(x);
            let orbit = sg.cyclic_subsemigroup(x);
            assert!(sg.is_idempotent(p), "{name}: {p} not idempotent");
            assert!(orbit.contains(&p), "{name}: idempotent power outside the orbit");
            let idempotents = orbit.iter().filter(|&&y| sg.is_idempotent(y)).count();
            assert_eq!(idempotents, 1, "{name}: orbit of {x} has {idempotents} idempotents");
        }

        // products over {s, e, f} with two occurrences of s never give s
        if let Some((r, s, t)) = find_nphard_triple(&sg) {
            let frame = hardness_idempotents(&sg, r, s, t).unwrap();
            assert_eq!(sg.mul(frame.e, s), s);
            assert_eq!(sg.mul(s, frame.f), s);
            let letters = [s, frame.e, frame.f];
            for _ in 0..10_000 {
                let len = rng.random_range(2..=12);
                let mut word: Vec<usize> =
                    (0..len).map(|_| letters[rng.random_range(0..3)]).collect();
                let p1 = rng.random_range(0..len);
                let mut p2 = rng.random_range(0..len);
                while p2 == p1 {
                    p2 = rng.random_range(0..len);
                }
                word[p1] = s;
                word[p2] = s;
                let prod = sg.product(&word).unwrap();
                assert_ne!(prod, s, "{name}: product with two s factors returned s");
                product_checks += 1;
            }
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "criterion 7 over time: {elapsed:?}");
    println!(
        "acceptance 7 (structural suite): PASS — {} catalog semigroups, {product_checks} hardness products, zero violations in {elapsed:.2?}",
        names.len()
    );
}
