//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use covpart::approx_ops::{
    lower_c4_equals_lower_c2, upper_c3_fixes_lower_c3, upper_cbar_singletons_match_neighborhoods,
};
use covpart::covgen::{enumerate_coverings, random_covering, Xoshiro256StarStar};
use covpart::{
    build_covering, check_excluded_number, check_reduct_sufficient, check_uniform_sufficient,
    common_block_repeat_degree, excluded_number, is_uniform_block, membership_repeat_degree,
    neighborhood, neighborhoods_family, oracle_is_neighborhood_partition, reduct, Covering,
    SufficientVerdict,
};

type Set = BTreeSet<usize>;

const RANDOM_SAMPLES: usize = 10_000;
const RANDOM_SEED: u64 = 0x5eed_2024;
const DELETION_ORDERS: usize = 3;
const GOLDEN_BUDGET: Duration = Duration::from_secs(1);

// ---- independent brute-force model -------------------------------------

fn blocks_of(c: &Covering) -> Vec<Set> {
    c.blocks().iter().map(|b| b.iter().collect()).collect()
}

fn brute_neighborhoods(n: usize, blocks: &[Set]) -> Vec<Set> {
    (0..n)
        .map(|x| {
            blocks
                .iter()
                .filter(|b| b.contains(&x))
                .fold((0..n).collect::<Set>(), |acc, b| {
                    acc.intersection(b).copied().collect()
                })
        })
        .collect()
}

fn brute_family(n: usize, blocks: &[Set]) -> BTreeSet<Set> {
    brute_neighborhoods(n, blocks).into_iter().collect()
}

fn brute_is_partition(n: usize, family: &BTreeSet<Set>) -> bool {
    let sets: Vec<&Set> = family.iter().collect();
    let pairwise_disjoint = sets
        .iter()
        .enumerate()
        .all(|(i, a)| sets[i + 1..].iter().all(|b| a.is_disjoint(b)));
    let union: Set = sets.iter().flat_map(|s| s.iter().copied()).collect();
    pairwise_disjoint && union.len() == n && sets.iter().all(|s| !s.is_empty())
}

fn reducible(blocks: &[Set], k: usize) -> bool {
    let union: Set = blocks
        .iter()
        .enumerate()
        .filter(|&(i, b)| i != k && b.is_subset(&blocks[k]) && b != &blocks[k])
        .flat_map(|(_, b)| b.iter().copied())
        .collect();
    union == blocks[k]
}

fn sequential_reduct(mut blocks: Vec<Set>, order: &[usize]) -> BTreeSet<Set> {
    let ranked: Vec<Set> = order.iter().map(|&k| blocks[k].clone()).collect();
    loop {
        let victim = ranked.iter().find_map(|target| {
            let pos = blocks.iter().position(|b| b == target)?;
            reducible(&blocks, pos).then_some(pos)
        });
        match victim {
            Some(pos) => {
                blocks.remove(pos);
            }
            None => return blocks.into_iter().collect(),
        }
    }
}

fn shuffle(len: usize, rng: &mut Xoshiro256StarStar) -> Vec<usize> {
    let mut v: Vec<usize> = (0..len).collect();
    for i in (1..len).rev() {
        v.swap(i, rng.below(i as u64 + 1) as usize);
    }
    v
}

/// Every invariant on one covering. `exhaustive_ops` enables the identities
/// that quantify over all subsets of the universe.
fn check_all(
    c: &Covering,
    exhaustive_ops: bool,
    rng: &mut Xoshiro256StarStar,
) -> Result<(), String> {
    let n = c.n();
    let blocks = blocks_of(c);
    let nbhd = brute_neighborhoods(n, &blocks);
    let truth = brute_is_partition(n, &brute_family(n, &blocks));

    let oracle = oracle_is_neighborhood_partition(c);
    if oracle.is_partition != truth {
        return Err(format!(
            "library oracle {} vs brute force {truth}",
            oracle.is_partition
        ));
    }
    let excluded = check_excluded_number(c);
    if excluded.is_partition != truth {
        return Err(format!(
            "excluded-number {} vs brute force {truth}",
            excluded.is_partition
        ));
    }
    if let Some((x, y)) = excluded.witness {
        if nbhd[x].contains(&y) == nbhd[y].contains(&x) {
            return Err(format!("witness ({x},{y}) is not one-sided"));
        }
    }
    if upper_cbar_singletons_match_neighborhoods(c) != truth {
        return Err("singleton upper identity disagrees".into());
    }
    if exhaustive_ops {
        if lower_c4_equals_lower_c2(c).map_err(|e| e.to_string())? != truth {
            return Err("lower operator identity disagrees".into());
        }
        if upper_c3_fixes_lower_c3(c).map_err(|e| e.to_string())? != truth {
            return Err("upper/lower fixpoint identity disagrees".into());
        }
    }

    let r = reduct(c);
    let reduct_blocks: BTreeSet<Set> = blocks_of(&r).into_iter().collect();
    if brute_family(n, &blocks_of(&r)) != brute_family(n, &blocks) {
        return Err("reduct changes the neighborhood family".into());
    }
    if neighborhoods_family(&r) != neighborhoods_family(c) {
        return Err("library neighborhood family differs after reduction".into());
    }
    for _ in 0..DELETION_ORDERS {
        let order = shuffle(blocks.len(), rng);
        if sequential_reduct(blocks.clone(), &order) != reduct_blocks {
            return Err(format!("deletion order {order:?} gives another reduct"));
        }
    }

    for x in 0..n {
        let dx = membership_repeat_degree(c, x).unwrap();
        if dx != blocks.iter().filter(|b| b.contains(&x)).count() || dx == 0 {
            return Err(format!("membership degree of {x}"));
        }
        for y in 0..n {
            let lxy = common_block_repeat_degree(c, x, y).unwrap();
            let brute = blocks
                .iter()
                .filter(|b| b.contains(&x) && b.contains(&y))
                .count();
            let dy = membership_repeat_degree(c, y).unwrap();
            if lxy != brute || lxy != common_block_repeat_degree(c, y, x).unwrap() {
                return Err(format!("common degree ({x},{y}) asymmetric or miscounted"));
            }
            if lxy > dx.min(dy) {
                return Err(format!(
                    "common degree ({x},{y}) above the smaller membership"
                ));
            }
            let y_in_nx = nbhd[x].contains(&y);
            if y_in_nx != (excluded_number(c, x, y).unwrap() == 0) {
                return Err(format!(
                    "{y} in N({x}) does not match a zero excluded number"
                ));
            }
            if y_in_nx && !nbhd[y].is_subset(&nbhd[x]) {
                return Err(format!("{y} in N({x}) but N({y}) not inside N({x})"));
            }
        }
    }

    if check_reduct_sufficient(c).is_partition() && !truth {
        return Err("reduct condition fired on a non-partition".into());
    }
    if check_uniform_sufficient(c).is_partition() && !truth {
        return Err("uniform condition fired on a non-partition".into());
    }
    Ok(())
}

// ---- fixtures -----------------------------------------------------------

fn cov(labels: &[&str], blocks: &[&[&str]]) -> Covering {
    build_covering(labels, blocks).expect("fixture is a covering")
}

fn index(c: &Covering, label: &str) -> usize {
    c.universe().index_of(label).unwrap()
}

fn block_index(c: &Covering, members: &[&str]) -> usize {
    c.to_labels()
        .iter()
        .position(|b| b.iter().map(String::as_str).eq(members.iter().copied()))
        .unwrap()
}

fn labels_of_set(c: &Covering, x: &str) -> Vec<String> {
    let b = neighborhood(c, index(c, x)).unwrap();
    c.universe().labels_of(&b)
}

fn ensure(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_owned())
    }
}

fn nested() -> Covering {
    cov(
        &["1", "2", "3", "4"],
        &[&["1", "2", "3"], &["1", "2"], &["3", "4"], &["4"]],
    )
}

fn nested_singletons() -> Covering {
    cov(
        &["1", "2", "3", "4"],
        &[&["1", "2", "3"], &["1", "2"], &["3", "4"], &["3"], &["4"]],
    )
}

fn star() -> Covering {
    cov(
        &["1", "2", "3"],
        &[&["1"], &["2"], &["3"], &["1", "2"], &["1", "3"]],
    )
}

fn triangle() -> Covering {
    cov(&["1", "2", "3"], &[&["1", "2"], &["1", "3"], &["2", "3"]])
}

fn path() -> Covering {
    cov(
        &["1", "2", "3", "4"],
        &[&["1", "2"], &["2", "3", "4"], &["3", "4"]],
    )
}

fn v(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

// ---- criteria -----------------------------------------------------------

fn golden_examples() -> Result<String, String> {
    let start = Instant::now();

    // (a) nested covering
    let c = nested();
    ensure(labels_of_set(&c, "1") == v(&["1", "2"]), "N(1)")?;
    ensure(labels_of_set(&c, "2") == v(&["1", "2"]), "N(2)")?;
    ensure(labels_of_set(&c, "3") == v(&["3"]), "N(3)")?;
    ensure(labels_of_set(&c, "4") == v(&["4"]), "N(4)")?;
    ensure(
        neighborhoods_family(&c).to_labels() == vec![v(&["1", "2"]), v(&["3"]), v(&["4"])],
        "neighborhood family of nested covering",
    )?;
    ensure(check_excluded_number(&c).is_partition, "nested: partition")?;
    ensure(reduct(&c) == c, "nested: reduct is the covering")?;
    ensure(
        !covpart::is_partition(&reduct(&c).into()),
        "nested: reduct is not a partition",
    )?;

    // (b) chain membership degrees
    let c = cov(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
    let d: Vec<usize> = (0..3)
        .map(|x| membership_repeat_degree(&c, x).unwrap())
        .collect();
    ensure(d == vec![1, 2, 1], "chain membership degrees (1,2,1)")?;

    // (c) uniform blocks of the path covering
    let c = path();
    ensure(
        is_uniform_block(&c, block_index(&c, &["2", "3", "4"])).unwrap(),
        "{2,3,4} uniform",
    )?;
    ensure(
        is_uniform_block(&c, block_index(&c, &["3", "4"])).unwrap(),
        "{3,4} uniform",
    )?;
    ensure(
        !is_uniform_block(&c, block_index(&c, &["1", "2"])).unwrap(),
        "{1,2} not uniform",
    )?;

    // (d) nested covering with singleton {3}
    let c = nested_singletons();
    ensure(
        membership_repeat_degree(&c, index(&c, "3")).unwrap() == 3,
        "degree of 3 is 3",
    )?;
    ensure(
        membership_repeat_degree(&c, index(&c, "4")).unwrap() == 2,
        "degree of 4 is 2",
    )?;
    ensure(
        check_excluded_number(&c).is_partition,
        "nested+singleton: partition",
    )?;
    ensure(
        check_uniform_sufficient(&c) == SufficientVerdict::Inconclusive,
        "nested+singleton: uniform check inconclusive",
    )?;

    // (e) star
    let c = star();
    ensure(
        reduct(&c).to_labels() == vec![v(&["1"]), v(&["2"]), v(&["3"])],
        "star reduct is the singletons",
    )?;
    ensure(
        check_reduct_sufficient(&c).is_partition(),
        "star reduct is a partition",
    )?;
    ensure(
        !is_uniform_block(&c, block_index(&c, &["1", "2"])).unwrap(),
        "{1,2} not uniform",
    )?;
    ensure(
        !is_uniform_block(&c, block_index(&c, &["1", "3"])).unwrap(),
        "{1,3} not uniform",
    )?;

    // (f) triangle
    let c = triangle();
    ensure(
        (0..c.len()).all(|k| is_uniform_block(&c, k).unwrap()),
        "triangle blocks all uniform",
    )?;
    ensure(reduct(&c) == c, "triangle reduct is the covering")?;
    ensure(
        !covpart::is_partition(&reduct(&c).into()),
        "triangle reduct is not a partition",
    )?;

    // (g) full common degree table of the path covering
    let c = path();
    let l = |a: &str, b: &str| common_block_repeat_degree(&c, index(&c, a), index(&c, b)).unwrap();
    ensure(
        l("1", "2") == 1 && l("2", "3") == 1 && l("2", "4") == 1,
        "degree-1 pairs",
    )?;
    ensure(l("1", "3") == 0 && l("1", "4") == 0, "degree-0 pairs")?;
    ensure(l("3", "4") == 2, "common degree of (3,4) is 2")?;

    let elapsed = start.elapsed();
    ensure(
        elapsed < GOLDEN_BUDGET,
        &format!("took {elapsed:?}, budget {GOLDEN_BUDGET:?}"),
    )?;
    Ok(format!("7 examples in {elapsed:?}"))
}

fn exhaustive_verification() -> Result<String, String> {
    let mut rng = Xoshiro256StarStar::seed_from_u64(RANDOM_SEED);
    let mut counts = Vec::new();
    for n in 1..=4 {
        let mut count = 0;
        for c in enumerate_coverings(n).map_err(|e| e.to_string())? {
            check_all(&c, true, &mut rng).map_err(|e| format!("{e} on {:?}", c.to_labels()))?;
            count += 1;
        }
        counts.push(count);
    }
    // coverings of an n-set: sum_k (-1)^k C(n,k) 2^(2^(n-k) - 1)
    let expected: Vec<usize> = (1..=4u32)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let binom = (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64);
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    sign * binom * (1i64 << ((1u32 << (n - k)) - 1))
                })
                .sum::<i64>() as usize
        })
        .collect();
    ensure(
        counts == expected,
        &format!("covering counts {counts:?} != {expected:?}"),
    )?;
    Ok(format!("coverings per n = {counts:?}, zero exceptions"))
}

fn randomized_verification() -> Result<String, String> {
    let mut params = Xoshiro256StarStar::seed_from_u64(RANDOM_SEED);
    let mut orders = Xoshiro256StarStar::seed_from_u64(!RANDOM_SEED);
    for i in 0..RANDOM_SAMPLES {
        let n = 5 + params.below(20) as usize;
        let m = 1 + params.below(2 * n as u64) as usize;
        let density = params.unit_f64();
        let seed = params.next_u64();
        let c = random_covering(n, m, density, seed).map_err(|e| e.to_string())?;
        check_all(&c, false, &mut orders).map_err(|e| {
            format!("sample {i}: {e}; replay with `covpart gen --n {n} --m {m} --density {density:?} --seed {seed}`")
        })?;
    }
    Ok(format!(
        "{RANDOM_SAMPLES} coverings, n in [5,24], master seed {RANDOM_SEED:#x}"
    ))
}

fn sufficiency_only() -> Result<String, String> {
    let c = nested();
    ensure(
        check_reduct_sufficient(&c) == SufficientVerdict::Inconclusive
            && oracle_is_neighborhood_partition(&c).is_partition,
        "reduct condition should fail on a partition-inducing covering",
    )?;
    let c = nested_singletons();
    ensure(
        check_uniform_sufficient(&c) == SufficientVerdict::Inconclusive
            && oracle_is_neighborhood_partition(&c).is_partition,
        "uniform condition should fail on a partition-inducing covering",
    )?;
    let c = star();
    ensure(
        check_reduct_sufficient(&c) == SufficientVerdict::Partition
            && check_uniform_sufficient(&c) == SufficientVerdict::Inconclusive,
        "reduct fires without uniform",
    )?;
    let c = triangle();
    ensure(
        check_uniform_sufficient(&c) == SufficientVerdict::Partition
            && check_reduct_sufficient(&c) == SufficientVerdict::Inconclusive,
        "uniform fires without reduct",
    )?;
    Ok("both converses refuted, conditions independent".into())
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_covpart"))
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn run(cmd: &mut Command) -> Result<Output, String> {
    cmd.output().map_err(|e| e.to_string())
}

fn determinism() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (a, b) = (dir.path().join("a.cov"), dir.path().join("b.cov"));
    for p in [&a, &b] {
        let o = run(bin()
            .args([
                "gen",
                "--n",
                "40",
                "--m",
                "9",
                "--density",
                "0.3",
                "--seed",
                "77",
                "--out",
            ])
            .arg(p))?;
        ensure(o.status.success(), "gen failed")?;
    }
    let ga = std::fs::read(&a).map_err(|e| e.to_string())?;
    ensure(
        ga == std::fs::read(&b).map_err(|e| e.to_string())?,
        "gen output differs",
    )?;

    // large enough to cross the parallel threshold
    let big = dir.path().join("big.cov");
    let o = run(bin()
        .args([
            "gen",
            "--n",
            "300",
            "--m",
            "60",
            "--density",
            "0.02",
            "--seed",
            "5",
            "--out",
        ])
        .arg(&big))?;
    ensure(o.status.success(), "gen failed")?;

    let mut files: Vec<PathBuf> = vec![a, big];
    files.extend(
        [
            "nested.cov",
            "chain.cov",
            "path.cov",
            "nested_singletons.cov",
        ]
        .iter()
        .map(|f| fixtures().join(f)),
    );
    let mut runs = 0;
    for f in &files {
        for args in [
            vec!["check", "--method", "auto"],
            vec!["check", "--method", "excluded"],
            vec!["report"],
            vec!["report", "--json"],
        ] {
            let outs: Vec<Output> = ["1", "4", "1"]
                .iter()
                .map(|t| run(bin().args(["--threads", t]).args(&args).arg(f)))
                .collect::<Result<_, _>>()?;
            for o in &outs[1..] {
                ensure(
                    o.stdout == outs[0].stdout && o.status.code() == outs[0].status.code(),
                    &format!("{args:?} on {} differs across runs", f.display()),
                )?;
            }
            runs += outs.len();
        }
    }
    Ok(format!(
        "gen byte-identical; {runs} check/report runs identical across thread counts"
    ))
}

fn bench_sanity() -> Result<String, String> {
    let args = [
        "bench",
        "--n",
        "8,24",
        "--m",
        "3,10",
        "--density",
        "0,0.4,1",
        "--seed",
        "9",
        "--repetitions",
        "2",
    ];
    let first = run(bin().args(args))?;
    let second = run(bin().args(args))?;
    ensure(first.status.success(), "bench reported a disagreement")?;
    let parse = |o: &Output| -> Vec<Vec<String>> {
        String::from_utf8_lossy(&o.stdout)
            .lines()
            .map(|l| l.split(',').map(str::to_owned).collect())
            .collect()
    };
    let (a, b) = (parse(&first), parse(&second));
    ensure(
        a[0].join(",") == "n,m,density,blocks,method,median_ns,verdict,agreement",
        "bench header",
    )?;
    ensure(a.len() == 1 + 2 * 2 * 3 * 3, "bench row count")?;
    ensure(
        a[1..].iter().all(|r| r.len() == 8 && r[7] == "true"),
        "agreement column",
    )?;
    let verdicts = |rows: &[Vec<String>]| -> Vec<(String, String)> {
        rows[1..]
            .iter()
            .map(|r| (r[4].clone(), r[6].clone()))
            .collect()
    };
    ensure(
        verdicts(&a) == verdicts(&b),
        "verdict columns differ across runs",
    )?;
    Ok(format!("{} rows, all agree", a.len() - 1))
}

type Criterion = (&'static str, fn() -> Result<String, String>);

fn main() {
    let criteria: [Criterion; 6] = [
        ("golden worked examples", golden_examples),
        (
            "exhaustive agreement of all characterizations, n <= 4",
            exhaustive_verification,
        ),
        (
            "randomized agreement on 10000 coverings",
            randomized_verification,
        ),
        (
            "sufficient conditions: not necessary, independent",
            sufficiency_only,
        ),
        ("determinism of gen, check and report", determinism),
        ("bench rows agree and schema is stable", bench_sanity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {}. {name} [{secs:.2}s] {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name} [{secs:.2}s] {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
