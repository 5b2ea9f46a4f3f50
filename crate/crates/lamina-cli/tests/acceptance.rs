//! One line per acceptance criterion: verdict, evidence, wall time against its budget.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use lamina::equivalence::*;
use lamina::generators::*;
use lamina::lamination::*;
use lamina::*;
use lamina_cli::io::{parse_lamination, parse_partition, serialize_for};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn a(p: i64, q: i64) -> Angle {
    Angle::frac(p, q)
}

// ---------- corpora ----------

fn tower(d: Degree, seed: &[Chord], portrait: &[Chord], depth: usize) -> Lamination {
    pullback(&PullbackSpec {
        seed: Lamination::new(d, seed.iter().cloned()).unwrap(),
        portrait: CriticalPortrait::new(d, portrait.iter().cloned()).unwrap(),
        depth,
        include_portrait: false,
    })
    .unwrap()
}

fn periodic_dendrite(depth: usize) -> Lamination {
    let leaf = Chord::frac((1, 3), (5, 6));
    tower(Degree::TWO, &[leaf.clone()], &[leaf], depth)
}

fn quad_class() -> Lamination {
    let q = [a(5, 24), a(7, 24), a(17, 24), a(19, 24)];
    let edges = (0..4).map(|i| Chord::new(q[i].clone(), q[(i + 1) % 4].clone()).unwrap());
    preset("basilica", 2).unwrap().with_leaves(edges).unwrap()
}

fn quad_split() -> Lamination {
    quad_class().with_leaves([Chord::frac((5, 24), (17, 24))]).unwrap()
}

/// Towers of degrees 2 and 3, depth at most 6.
fn tower_corpus() -> Vec<(String, Lamination)> {
    let mut out = Vec::new();
    for name in PRESETS {
        for depth in 1..=6 {
            out.push((format!("{name}/{depth}"), preset(name, depth).unwrap()));
        }
    }
    for depth in [5, 6] {
        out.push((format!("dendrite-periodic/{depth}"), periodic_dendrite(depth)));
    }
    let d3 = Degree::THREE;
    let cubic: Vec<(&str, Vec<Chord>, Vec<Chord>)> = vec![
        ("cubic-a", vec![Chord::frac((1, 4), (3, 4))], vec![Chord::frac((1, 12), (3, 4)), Chord::frac((1, 4), (7, 12))]),
        ("cubic-b", vec![Chord::frac((1, 8), (3, 8))], vec![Chord::frac((0, 1), (2, 3)), Chord::frac((1, 18), (7, 18))]),
        ("cubic-c", vec![Chord::frac((5, 8), (7, 8))], vec![Chord::frac((0, 1), (1, 3)), Chord::frac((5, 9), (8, 9))]),
        (
            "cubic-triangle",
            vec![Chord::frac((1, 13), (3, 13)), Chord::frac((3, 13), (9, 13)), Chord::frac((1, 13), (9, 13))],
            vec![Chord::frac((1, 36), (25, 36)), Chord::frac((1, 4), (7, 12))],
        ),
        ("cubic-diameter", vec![Chord::frac((0, 1), (1, 2))], vec![Chord::frac((0, 1), (2, 3)), Chord::frac((1, 12), (5, 12))]),
    ];
    for (name, seed, portrait) in &cubic {
        for depth in 1..=3 {
            out.push((format!("{name}/{depth}"), tower(d3, seed, portrait, depth)));
        }
    }
    let hex = hexagon_example();
    out.push(("hexagon-base".into(), hex.base));
    out.push(("hexagon".into(), hex.lamination));
    out
}

// ---------- oracles ----------

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Matchings of `a`-preimages with `b`-preimages, unlinked pairwise, endpoints compared as integers.
fn brute_collections(d: u32, m: (i64, i64, i64)) -> BTreeSet<Vec<(i64, i64)>> {
    // image {x/q, y/q}; preimages (x + k q) / (d q)
    let (x, y, q) = m;
    let pa: Vec<i64> = (0..d as i64).map(|k| x + k * q).collect();
    let pb: Vec<i64> = (0..d as i64).map(|k| y + k * q).collect();
    let crosses = |c: (i64, i64), e: (i64, i64)| {
        let inside = |t: i64| c.0 < t && t < c.1;
        c.0 != e.0 && c.0 != e.1 && c.1 != e.0 && c.1 != e.1 && inside(e.0) != inside(e.1)
    };
    let mut out = BTreeSet::new();
    for p in perms(d as usize) {
        let mut col: Vec<(i64, i64)> = (0..d as usize).map(|i| (pa[i].min(pb[p[i]]), pa[i].max(pb[p[i]]))).collect();
        if (0..col.len()).all(|i| (0..i).all(|j| !crosses(col[i], col[j]))) {
            col.sort();
            out.insert(col);
        }
    }
    out
}

fn as_int(c: &Chord, n: i64) -> (i64, i64) {
    let f = |t: &Angle| (t.as_rational() * num_rational::BigRational::from_integer(n.into())).to_integer().to_i64().unwrap();
    (f(c.lo()), f(c.hi()))
}

fn random_lamination(rng: &mut ChaCha8Rng, d: Degree) -> Lamination {
    let target = rng.gen_range(0..=40);
    let mut leaves: Vec<Chord> = Vec::new();
    for _ in 0..target * 30 {
        if leaves.len() == target {
            break;
        }
        let q = rng.gen_range(2..=120);
        let Ok(c) = Chord::new(a(rng.gen_range(0..q), q), a(rng.gen_range(0..q), q)) else { continue };
        if !leaves.contains(&c) && leaves.iter().all(|l| !crosses(l, &c)) {
            leaves.push(c);
        }
    }
    Lamination::new(d, leaves).unwrap()
}

fn cyclic4(w: &Angle, x: &Angle, y: &Angle, z: &Angle) -> bool {
    in_cyclic_order(w, x, y) && in_cyclic_order(x, y, z) && in_cyclic_order(y, z, w)
}

// ---------- criteria ----------

fn face_count() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut bad = 0;
    let mut total_leaves = 0;
    for i in 0..200 {
        let d = Degree::new(2 + i % 3).unwrap();
        let l = random_lamination(&mut rng, d);
        total_leaves += l.len();
        if gaps(&l).len() != l.len() + 1 {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("200 laminations, {total_leaves} leaves in total, {bad} mismatches"))
}

fn catalan_count() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let want = [(2u32, 2usize), (3, 5), (4, 14)];
    let mut bad = 0;
    for (d, cat) in want {
        let deg = Degree::new(d).unwrap();
        let mut done = 0;
        while done < 50 {
            let q = rng.gen_range(2..=120i64);
            let (x, y) = (rng.gen_range(0..q), rng.gen_range(0..q));
            if x == y {
                continue;
            }
            let (x, y) = (x.min(y), x.max(y));
            let m = Chord::new(a(x, q), a(y, q)).unwrap();
            let got: BTreeSet<Vec<(i64, i64)>> = full_preimage_collections(deg, &m)
                .iter()
                .map(|col| {
                    let mut v: Vec<(i64, i64)> = col.iter().map(|c| as_int(c, d as i64 * q)).collect();
                    v.sort();
                    v
                })
                .collect();
            let oracle = brute_collections(d, (x, y, q));
            if got.len() != cat || oracle.len() != cat || got != oracle {
                bad += 1;
            }
            done += 1;
        }
    }
    outcome(bad == 0, format!("150 chords over d = 2, 3, 4; {bad} disagreements with Catalan(d) and the matching enumerator"))
}

fn crossing_parity() -> Outcome {
    let mut pts: BTreeSet<Angle> = BTreeSet::new();
    for q in 1..=30 {
        for p in 0..q {
            pts.insert(a(p, q));
        }
    }
    let pts: Vec<Angle> = pts.into_iter().collect();
    let (mut checked, mut bad) = (0u64, 0u64);
    for d in [Degree::TWO, Degree::THREE] {
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let m = Chord::new(pts[i].clone(), pts[j].clone()).unwrap();
                for col in full_preimage_collections(d, &m) {
                    let (pa, pb): (Vec<&Angle>, Vec<&Angle>) = (
                        col.iter().map(|c| if sigma(d, c.lo()) == pts[i] { c.lo() } else { c.hi() }).collect(),
                        col.iter().map(|c| if sigma(d, c.lo()) == pts[i] { c.hi() } else { c.lo() }).collect(),
                    );
                    // same-letter pairs: two a-points, or two b-points
                    for (p, partner) in [(&pa, &pb), (&pb, &pa)] {
                        for u in 0..p.len() {
                            for v in u + 1..p.len() {
                                let probe = Chord::new(p[u].clone(), p[v].clone()).unwrap();
                                let n = col.iter().filter(|c| crosses(c, &probe)).count();
                                let order = cyclic4(p[u], partner[u], p[v], partner[v]) || cyclic4(p[u], partner[v], p[v], partner[u]);
                                checked += 1;
                                if (n % 2 == 0) != order {
                                    bad += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    outcome(bad == 0, format!("{checked} same-letter pairs over d = 2, 3, denominators <= 30; {bad} violations"))
}

fn gapwise_ok(l: &Lamination, frontier: &[Chord]) -> bool {
    gaps(l)
        .iter()
        .filter(|g| !g.leaves().any(|c| frontier.contains(c)))
        .all(|g| !check_gap_invariance(l, g).unwrap().is_fail())
}

fn sibling_implies_thurston(corpus: &[(String, Lamination)]) -> Outcome {
    let mut sib = 0;
    let mut bad = Vec::new();
    for (name, l) in corpus {
        let s = check_sibling_invariant(l, &Frontier::Auto);
        if s.sibling_invariant != Some(true) {
            continue;
        }
        sib += 1;
        let t = check_thurston(l, &Frontier::Auto);
        let leafwise = t.forward_invariant == Some(true) && t.backward_invariant_relative == Some(true);
        if t.thurston_invariant != Some(true) || !leafwise || !gapwise_ok(l, &t.frontier) {
            bad.push(name.clone());
        }
    }
    outcome(
        bad.is_empty() && corpus.len() >= 20,
        format!("{} towers, {sib} sibling invariant, counterexamples {bad:?}", corpus.len()),
    )
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn q_implies_sibling_and_proper() -> Outcome {
    let mut parts: Vec<(String, Degree, Partition)> = Vec::new();
    for file in ["rabbit.classes", "basilica.classes", "quad.classes"] {
        let p = parse_partition(&std::fs::read_to_string(fixture(file)).unwrap()).unwrap();
        parts.push((file.into(), Degree::TWO, p));
    }
    for name in PRESETS {
        for depth in 1..=4 {
            parts.push((format!("{name}/{depth}"), Degree::TWO, finite_classes(&preset(name, depth).unwrap())));
        }
    }
    parts.push(("hexagon-base".into(), Degree::THREE, finite_classes(&hexagon_example().base)));
    let mut passing = 0;
    let mut named = 0;
    let mut bad = Vec::new();
    for (name, d, p) in &parts {
        if !check_laminational_equivalence(*d, p).passes() {
            continue;
        }
        passing += 1;
        if name.ends_with(".classes") {
            named += 1;
        }
        let q = q_lamination_from(*d, p).unwrap();
        let sib = check_sibling_invariant(&q, &Frontier::Auto).sibling_invariant == Some(true);
        if !sib || !is_proper(&q).holds {
            bad.push(name.clone());
        }
    }
    outcome(
        bad.is_empty() && passing >= 10 && named == 3,
        format!("{passing} of {} partitions pass the equivalence check (incl. {named}/3 fixture files); failures {bad:?}", parts.len()),
    )
}

fn hexagon_separation() -> Outcome {
    let h = hexagon_example();
    let th = check_thurston(&h.lamination, &Frontier::Auto).thurston_invariant == Some(true);
    let s = check_sibling_invariant(&h.lamination, &Frontier::Auto);
    let witness = s.witnesses_for(Flag::SiblingInvariant).any(|w| w.item == WitnessItem::Leaf(h.witness().clone()));
    let restored = check_sibling_invariant(&h.base, &Frontier::Auto).sibling_invariant == Some(true);
    // everything not in the base is one of the two diagonals or a pullback of one
    let extra: Vec<&Chord> = h.lamination.leaves().iter().filter(|c| !h.base.contains(c)).collect();
    let traced = extra.iter().all(|c| {
        let mut cur = (*c).clone();
        for _ in 0..=h.depth {
            if h.inserted.contains(&cur) {
                return true;
            }
            match chord_image(Degree::THREE, &cur) {
                ChordOrPoint::Chord(n) => cur = n,
                ChordOrPoint::Point(_) => return false,
            }
        }
        false
    });
    let ok = th && s.sibling_invariant == Some(false) && witness && restored && traced;
    outcome(
        ok,
        format!(
            "thurston {th}, sibling {:?}, witness {} {}, {} extra leaves traced to the diagonals {traced}, base sibling {restored}",
            s.sibling_invariant,
            h.witness(),
            if witness { "reported" } else { "missing" },
            extra.len()
        ),
    )
}

fn corollaries_degree_two() -> Outcome {
    let mut corpus: Vec<(String, Lamination)> = Vec::new();
    for name in PRESETS {
        for depth in 1..=6 {
            corpus.push((format!("{name}/{depth}"), preset(name, depth).unwrap()));
        }
    }
    corpus.push(("quad-class".into(), quad_class()));
    corpus.push(("quad-split".into(), quad_split()));
    corpus.push(("dendrite-periodic/5".into(), periodic_dendrite(5)));
    corpus.push(("dendrite-periodic/6".into(), periodic_dendrite(6)));
    let mut bad = Vec::new();
    let (mut clean_th, mut sib) = (0, 0);
    let mut seen = std::collections::BTreeMap::new();
    for (name, l) in &corpus {
        let r = classify(l);
        let q = is_q_lamination(l).holds;
        let split = critical_splitting(l).unwrap();
        seen.insert(name.clone(), (q, r.proper, split.clone()));
        if r.clean == Some(true) && r.thurston_invariant == Some(true) {
            clean_th += 1;
            if !q {
                bad.push(format!("{name}: clean and thurston but not q"));
            }
        }
        if r.sibling_invariant == Some(true) {
            sib += 1;
            let rhs = r.proper == Some(true) && split == Splitting::None;
            if q != rhs {
                bad.push(format!("{name}: q {q} vs proper {:?} and splitting {split:?}", r.proper));
            }
        }
    }
    let rabbit_ok = seen["rabbit/3"].0;
    let split_ok = matches!(seen["quad-split"], (false, _, Splitting::Leaf(_)));
    let dendrite_ok = matches!(seen["dendrite-periodic/5"], (false, Some(false), _));
    outcome(
        bad.is_empty() && rabbit_ok && split_ok && dendrite_ok,
        format!(
            "{} laminations, {clean_th} clean and thurston, {sib} sibling; rabbit q {rabbit_ok}, diagonal split detected {split_ok}, periodic dendrite not proper and not q {dendrite_ok}; inconsistencies {bad:?}",
            corpus.len()
        ),
    )
}

fn gapfree() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=10u32 {
        let g = gapfree_family(Degree::TWO, n);
        let leaves: Vec<&Chord> = g.lamination.leaves().iter().collect();
        if leaves.len() != (1 << n) - 1 {
            bad.push(format!("n = {n}: {} leaves", leaves.len()));
        }
        // nested: ordering the leaves by their left endpoint orders them by inclusion
        let big = 1i64 << (n + 1);
        let ints: Vec<(i64, i64)> = leaves.iter().map(|c| as_int(c, big)).collect();
        let nested = ints.windows(2).all(|w| w[0].0 < w[1].0 && w[1].1 < w[0].1);
        // tent map on numerators: t = k / 2^(n+1) goes to min(2k mod N, N - 2k mod N)
        let tent = g.report.steps.iter().all(|s| {
            let k = (s.t.as_rational() * num_rational::BigRational::from_integer(big.into())).to_integer().to_i64().unwrap();
            let two_k = (2 * k).rem_euclid(big);
            let img = two_k.min(big - two_k);
            let want = if img == 0 || 2 * img == big { None } else { Some(a(img, big)) };
            s.image == want
        });
        if !nested || !tent || !g.report.matches {
            bad.push(format!("n = {n}: nested {nested}, tent {tent}"));
        }
    }
    outcome(bad.is_empty(), format!("n = 1..10 checked against an integer tent-map oracle; problems {bad:?}"))
}

fn sibling_limits() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut bad = 0;
    let mut runs = 0;
    while runs < 100 {
        let d = if runs % 2 == 0 { Degree::TWO } else { Degree::THREE };
        let q = rng.gen_range(3..=60i64);
        let (x, y) = (rng.gen_range(0..q), rng.gen_range(0..q));
        let Ok(m) = Chord::new(a(x, q), a(y, q)) else { continue };
        runs += 1;
        let n = rng.gen_range(2..=6);
        let s = converging_sibling_tuples(d, &m, n);
        let good = |col: &[Chord], img: &Chord| {
            col.len() == d.get() as usize
                && col.iter().all(|c| chord_image(d, c) == ChordOrPoint::Chord(img.clone()))
                && (0..col.len()).all(|i| (0..i).all(|j| col[i].disjoint(&col[j]) && !crosses(&col[i], &col[j])))
        };
        let mut ok = good(&s.limit, &s.limit_image) && s.collections.len() == n;
        let limit = Lamination::new_unchecked(d, s.limit.iter().cloned());
        let mut last: Option<num_rational::BigRational> = None;
        for (col, img) in s.collections.iter().zip(&s.images) {
            ok &= good(col, img);
            let h = hausdorff_distance(&Lamination::new_unchecked(d, col.iter().cloned()), &limit).unwrap();
            if let Some(p) = &last {
                ok &= &h < p;
            }
            last = Some(h);
        }
        if !ok {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{runs} sequences over d = 2, 3; {bad} failures"))
}

fn orientation(corpus: &[(String, Lamination)]) -> Outcome {
    let (mut pairs, mut bad) = (0u64, 0u64);
    let (mut gap_pairs, mut gap_bad) = (0u64, 0u64);
    for (_, l) in corpus {
        let d = l.degree();
        for ell in l.leaves() {
            if is_critical(d, ell) {
                continue;
            }
            for col in sibling_collections(l, ell).unwrap() {
                for i in 0..col.len() {
                    for j in i + 1..col.len() {
                        let x: Vec<Angle> = col[i].endpoints().into_iter().cloned().collect();
                        let y: Vec<Angle> = col[j].endpoints().into_iter().cloned().collect();
                        pairs += 1;
                        if same_orientation(d, &x, &y) != Ok(true) {
                            bad += 1;
                        }
                    }
                }
            }
        }
        // sibling polygons: disjoint faces with the same injective image
        let polys: Vec<Vec<Angle>> = gaps(l)
            .into_iter()
            .filter(|g| g.is_polygon() && g.vertices.len() >= 3)
            .map(|g| g.vertices)
            .filter(|v| v.iter().map(|x| sigma(d, x)).collect::<BTreeSet<_>>().len() == v.len())
            .collect();
        for i in 0..polys.len() {
            for j in i + 1..polys.len() {
                let img = |v: &[Angle]| v.iter().map(|x| sigma(d, x)).collect::<BTreeSet<_>>();
                if img(&polys[i]) == img(&polys[j]) && polys[i].iter().all(|x| !polys[j].contains(x)) {
                    gap_pairs += 1;
                    if same_orientation(d, &polys[i], &polys[j]) != Ok(true) {
                        gap_bad += 1;
                    }
                }
            }
        }
    }
    outcome(
        bad == 0,
        format!("{pairs} chord pairs in full sibling collections, {bad} failures; sibling polygons {gap_pairs} pairs, {gap_bad} failures"),
    )
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_lamina");
    let f = |n: &str| fixture(n).to_str().unwrap().to_string();
    let tmp = tempfile::tempdir().unwrap();
    let out = |n: &str| tmp.path().join(n).to_str().unwrap().to_string();
    let cases: Vec<(Vec<String>, i32)> = vec![
        (vec!["classify".into(), f("rabbit_pair.lam")], 0),
        (vec!["classify".into(), f("hexagon.lam")], 0),
        (vec!["validate".into(), "--check".into(), "q".into(), f("hexagon.lam")], 1),
        (vec!["validate".into(), "--check".into(), "sibling".into(), f("hexagon.lam")], 1),
        (vec!["validate".into(), "--check".into(), "thurston".into(), f("hexagon.lam")], 0),
        (vec!["validate".into(), "--check".into(), "sibling".into(), f("hexagon_base.lam")], 0),
        (vec!["validate".into(), "--check".into(), "q".into(), f("quad_class.lam")], 0),
        (vec!["validate".into(), "--check".into(), "q".into(), f("quad_split.lam")], 1),
        (vec!["validate".into(), "--check".into(), "proper".into(), f("dendrite_periodic.lam")], 1),
        (vec!["validate".into(), "--check".into(), "q".into(), f("rabbit_tower.lam")], 0),
        (vec!["gaps".into(), f("quad_split.lam")], 0),
        (vec!["pullback".into(), "--spec".into(), f("dendrite_spec.json"), "-o".into(), out("d.lam")], 0),
        (vec!["qlam".into(), "--classes".into(), f("quad.classes"), "--degree".into(), "2".into(), "-o".into(), out("q.lam")], 0),
        (vec!["qlam".into(), "--classes".into(), f("crossing.classes"), "--degree".into(), "2".into(), "-o".into(), out("x.lam")], 1),
        (vec!["render".into(), f("hexagon.lam"), "-o".into(), out("h.svg")], 0),
        (vec!["render".into(), f("empty.lam"), "-o".into(), out("e.svg")], 2),
        (vec!["validate".into(), f("crossing.lam")], 2),
        (vec!["search".into(), "hexagon".into(), "--degree".into(), "3".into(), "--max-den".into(), "13".into()], 0),
        (vec!["unknown-subcommand".into()], 2),
    ];
    let mut bad = Vec::new();
    for (args, want) in &cases {
        let got = Command::new(bin).args(args).output().unwrap().status.code();
        if got != Some(*want) {
            bad.push(format!("{} -> {got:?}, want {want}", args[0]));
        }
    }
    let mut trips = 0;
    for entry in std::fs::read_dir(fixture("")).unwrap() {
        let p = entry.unwrap().path();
        let name = p.file_name().unwrap().to_str().unwrap().to_string();
        let lamination_file = p.extension().is_some_and(|e| e == "lam") || name == "rabbit_pair.json";
        if !lamination_file || name == "crossing.lam" || name == "empty.lam" {
            continue;
        }
        let text = std::fs::read_to_string(&p).unwrap();
        let once = serialize_for(&p, &parse_lamination(&text).unwrap());
        let twice = serialize_for(&p, &parse_lamination(&once).unwrap());
        trips += 1;
        if once != text || twice != once {
            bad.push(format!("round trip {name}"));
        }
    }
    let pulled = std::fs::read_to_string(tmp.path().join("d.lam")).unwrap_or_default();
    if pulled != std::fs::read_to_string(fixture("dendrite_periodic.lam")).unwrap() {
        bad.push("pullback output differs from fixture".into());
    }
    outcome(bad.is_empty(), format!("{} invocations, {trips} round trips; problems {bad:?}", cases.len()))
}

fn run(n: usize, title: &str, budget: u64, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let o = f();
    let took = t.elapsed();
    let in_time = took < Duration::from_secs(budget);
    let ok = o.ok && in_time;
    println!(
        "[{}] {n:>2} {title}: {} ({:.2} s of {budget} s)",
        if ok { "PASS" } else { "FAIL" },
        o.detail,
        took.as_secs_f64()
    );
    ok
}

fn main() {
    let t = Instant::now();
    let corpus = tower_corpus();
    println!("tower corpus: {} laminations built in {:.2} s", corpus.len(), t.elapsed().as_secs_f64());
    let results = [
        run(1, "face-count law", 10, face_count),
        run(2, "Catalan count", 10, catalan_count),
        run(3, "crossing parity", 60, crossing_parity),
        run(4, "sibling implies Thurston", 60, || sibling_implies_thurston(&corpus)),
        run(5, "q implies sibling and proper", 30, q_implies_sibling_and_proper),
        run(6, "hexagon separation", 5, hexagon_separation),
        run(7, "degree-two corollaries", 30, corollaries_degree_two),
        run(8, "gap-free family", 5, gapfree),
        run(9, "sibling limits", 10, sibling_limits),
        run(10, "orientation", 30, || orientation(&corpus)),
        run(11, "CLI contract", 5, cli_contract),
    ];
    let passed = results.iter().filter(|r| **r).count();
    println!("{passed}/{} criteria pass", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
