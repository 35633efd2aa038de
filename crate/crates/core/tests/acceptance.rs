//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! The process fails on any failing check except those listed as known
//! unattainable, whose FAIL line is still printed.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::process::ExitCode;

use num_complex::Complex64 as C;
use pmod::algebra::{
    boxtimes, dual_module, duality_check, kawamura, scalar_coords_iso, GroupCoords, ScalarModule,
};
use pmod::families::{
    atomic_diffuse_fuse, atomic_module, d2_fuse, gp_canonical, gp_fuse, gp_module, prime_words, random_gp_vector,
    random_module, AtomicLabel, GpVector, D2,
};
use pmod::linalg::kernel::subspace_angle;
use pmod::linalg::kron::left_distributive_shuffle;
use pmod::linalg::random::{random_unit_vector, random_unitary};
use pmod::linalg::{flip_permutation, kron, polar, vnorm, CMatrix};
use pmod::structure::{
    atomic_part, classify_parts, complete_submodule, decompose_full, equivalent, intertwiner_basis, is_irreducible,
    socle, Verdict,
};
use pmod::{ModuleClass, PModule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RTOL: f64 = 1e-9;

struct Check {
    name: String,
    ok: bool,
    detail: String,
    known_unattainable: bool,
}

#[derive(Default)]
struct Criterion {
    checks: Vec<Check>,
}

impl Criterion {
    fn check(&mut self, name: &str, ok: bool, detail: String) {
        self.checks.push(Check { name: name.into(), ok, detail, known_unattainable: false });
    }

    fn bound(&mut self, name: &str, value: f64, limit: f64) {
        self.check(name, value <= limit, format!("{value:.2e} <= {limit:.0e}"));
    }

    fn known_unattainable(&mut self, name: &str, ok: bool, detail: String) {
        self.checks.push(Check { name: name.into(), ok, detail, known_unattainable: true });
    }
}

fn r(x: f64) -> C {
    C::new(x, 0.0)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gap(m: &PModule, n: &PModule) -> f64 {
    m.max_leg_distance(n)
}

fn conj_module(m: &PModule, u: &CMatrix) -> PModule {
    m.conjugate_by(u)
}

fn random_scalar<R: Rng>(rng: &mut R) -> ScalarModule {
    let t: f64 = rng.gen_range(0.05..0.95);
    let (pa, pb): (f64, f64) = (rng.gen_range(-PI..PI), rng.gen_range(-PI..PI));
    ScalarModule::new(C::from_polar(t.sqrt(), pa), C::from_polar((1.0 - t).sqrt(), pb))
}

fn random_phase<R: Rng>(rng: &mut R) -> C {
    C::from_polar(1.0, rng.gen_range(-PI..PI))
}

fn random_d2<R: Rng>(rng: &mut R) -> D2 {
    let mut s = || random_scalar(rng);
    let (x, y) = (s(), s());
    D2::new(x.a, y.a, x.b, y.b)
}

fn non_full_pair() -> PModule {
    let s = 2f64.sqrt();
    let a = CMatrix::from_real(2, 2, &[s, s, s - 2.0, s + 2.0]).scale_re(0.25);
    let b = CMatrix::from_real(2, 2, &[s + 2.0, s - 2.0, s, s]).scale_re(0.25);
    PModule::pair(a, b).unwrap()
}

/// Greedy matching of two phase multisets; the worst matched distance.
fn multiset_gap(a: &[C], b: &[C]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for x in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .unwrap();
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}

fn direct_sum_all(ms: &[PModule]) -> PModule {
    ms[1..].iter().fold(ms[0].clone(), |acc, m| acc.direct_sum(m).unwrap())
}

fn sample_aperiodic<R: Rng>(len: usize, rng: &mut R) -> GpVector {
    loop {
        let z = random_gp_vector(len, rng);
        if gp_canonical(&z).1 {
            return z;
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::default();
    let mut rng = rng(101);
    let mut worst: f64 = 0.0;
    let mut note = |m: &PModule| worst = worst.max(m.pythagorean_residual());
    for len in 1..=5 {
        for w in prime_words(len) {
            note(&atomic_module(&AtomicLabel::new(&w, random_phase(&mut rng)).unwrap()));
        }
    }
    for len in 1..=6 {
        note(&gp_module(&random_gp_vector(len, &mut rng)).unwrap());
    }
    for _ in 0..10 {
        note(&random_d2(&mut rng).to_module());
    }
    for seed in 0..20u64 {
        let d = 1 + (seed as usize) % 4;
        let class = if seed % 2 == 0 { ModuleClass::M } else { ModuleClass::N };
        let m = random_module(d, class, seed, 0).unwrap();
        let mt = random_module(1 + (seed as usize) % 3, ModuleClass::N, seed + 1000, 0).unwrap();
        note(&m);
        note(&boxtimes(&m, &mt, RTOL).unwrap());
        note(&kawamura(&m, &mt));
        note(&dual_module(&mt, RTOL).unwrap());
    }
    c.bound("constructor residual", worst, 1e-9);

    let mut worst_cons: f64 = 0.0;
    for seed in 0..100u64 {
        let d = 1 + (seed as usize) % 5;
        let class = if seed % 2 == 0 { ModuleClass::M } else { ModuleClass::N };
        let m = random_module(d, class, 500 + seed, 0).unwrap();
        let xi = random_unit_vector(d, &mut rng);
        let mut level = vec![xi];
        for _ in 1..=6 {
            level = level.iter().flat_map(|v| m.legs().iter().map(move |l| l.mul_vec(v))).collect();
            let total: f64 = level.iter().map(|v| vnorm(v).powi(2)).sum();
            worst_cons = worst_cons.max((total - 1.0).abs());
        }
    }
    c.bound("word-norm conservation, n <= 6", worst_cons, 1e-9);
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::default();
    let (mut assoc, mut flip, mut unit, mut dist, mut stab): (f64, f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0, 0.0);
    let one = PModule::unit();
    for seed in 0..50u64 {
        let s = seed as usize;
        let dims = [1 + s % 3, 1 + (s / 3) % 3, 1 + (s / 9) % 3];
        let ms: Vec<PModule> =
            (0..3).map(|k| random_module(dims[k], ModuleClass::M, 2000 + 3 * seed + k as u64, s % 2).unwrap()).collect();
        let (m, mt, mh) = (&ms[0], &ms[1], &ms[2]);
        let bx = |x: &PModule, y: &PModule| boxtimes(x, y, RTOL).unwrap();

        assoc = assoc.max(gap(&bx(&bx(m, mt), mh), &bx(m, &bx(mt, mh))));

        let f = flip_permutation(m.dim(), mt.dim());
        flip = flip.max(gap(&conj_module(&bx(m, mt), &f), &bx(mt, m)));

        unit = unit.max(gap(&bx(m, &one), m)).max(gap(&bx(&one, m), m));

        let sum = m.direct_sum(mh).unwrap();
        dist = dist.max(gap(&bx(&sum, mt), &bx(m, mt).direct_sum(&bx(mh, mt)).unwrap()));
        let p = left_distributive_shuffle(mt.dim(), m.dim(), mh.dim());
        dist = dist.max(gap(&conj_module(&bx(mt, &sum), &p), &bx(mt, m).direct_sum(&bx(mt, mh)).unwrap()));

        let u = random_unitary(m.dim(), &mut rng(seed));
        let lhs = bx(&conj_module(m, &u), mt);
        let rhs = conj_module(&bx(m, mt), &kron(&u, &CMatrix::identity(mt.dim())));
        stab = stab.max(gap(&lhs, &rhs));
    }
    c.bound("associativity", assoc, 1e-9);
    c.bound("flip symmetry", flip, 1e-10);
    c.bound("unit law", unit, 1e-10);
    c.bound("distributivity up to shuffle", dist, 1e-9);
    c.bound("conjugation stability", stab, 1e-9);
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::default();
    let mut bad = Vec::new();
    for seed in 0..25u64 {
        let s = seed as usize;
        let (d, dt) = (1 + s % 3, 1 + (s / 3) % 3);
        let m = random_module(d, ModuleClass::M, 3000 + seed, 0).unwrap();
        let mt = random_module(dt, ModuleClass::M, 3100 + seed, 0).unwrap();
        let p = boxtimes(&m, &mt, RTOL).unwrap();
        match decompose_full(&p, seed, RTOL) {
            Ok(rep) => {
                let total: usize = rep.summands.iter().map(|x| x.dim()).sum();
                if total != d * dt || rep.p_dimension != d * dt {
                    bad.push(format!("seed {seed}: {total} vs {}", d * dt));
                }
            }
            Err(e) => bad.push(format!("seed {seed}: {}", e.code())),
        }
    }
    c.check("summand dimensions sum to d*d'", bad.is_empty(), format!("{} of 25 pairs off {bad:?}", bad.len()));
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::default();
    let m = non_full_pair();
    let v = complete_submodule(&m, RTOL).unwrap();
    let target = CMatrix::from_real(2, 1, &[FRAC_1_SQRT_2, FRAC_1_SQRT_2]);
    c.check("complete submodule of m is 1-dimensional", v.cols() == 1, format!("dim {}", v.cols()));
    if v.cols() == 1 {
        c.bound("angle to (1,1)/sqrt2", subspace_angle(&v, &target), 1e-8);
    }
    let n = ScalarModule::new(r(0.5), r(0.75f64.sqrt()));
    let nm = boxtimes(&n.to_module(), &m, RTOL).unwrap();
    let ends = intertwiner_basis(&nm, &nm, RTOL).unwrap().len();
    c.check("n⊠m self-intertwiners are scalars", ends == 1, format!("dimension {ends}"));
    let pdim = socle(&nm, RTOL).unwrap().isometry.cols();
    c.check("n⊠m has p_dimension 2", pdim == 2, format!("p_dimension {pdim}"));
    let back = boxtimes(&n.inverse().unwrap().to_module(), &nm, RTOL).unwrap();
    let e = equivalent(&back, &m, RTOL, 4).unwrap();
    c.check("n^-1⊠(n⊠m) ≅ m", e.verdict == Verdict::True, e.reason);
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::default();
    let l = FRAC_1_SQRT_2;
    let alpha = C::from_polar(1.0, PI / 7.0);
    let i = C::new(0.0, l);
    let x = D2::new(i, -i, alpha * l, r(l));
    let y = D2::new(i, -i, alpha.conj() * l, r(l));
    let targets: Vec<ScalarModule> =
        [(-l, l), (-l, -l), (l, l), (l, -l)].iter().map(|&(a, b)| ScalarModule::new(r(a), r(b))).collect();

    let closed: Vec<ScalarModule> = d2_fuse(&x, &y, RTOL).iter().filter_map(|b| b.split).flatten().collect();
    let p = boxtimes(&x.to_module(), &y.to_module(), RTOL).unwrap();
    let direct: Vec<ScalarModule> = match decompose_full(&p, 7, RTOL) {
        Ok(rep) => rep
            .summands
            .iter()
            .filter(|s| s.dim() == 1)
            .map(|s| ScalarModule::from_module(&p.restrict(&s.isometry)).unwrap())
            .collect(),
        Err(_) => Vec::new(),
    };
    for (name, found) in [("closed form", &closed), ("boxtimes + decompose", &direct)] {
        let mut worst: f64 = if found.len() == 4 { 0.0 } else { f64::INFINITY };
        let mut used = [false; 4];
        for t in &targets {
            let hit = found.iter().enumerate().find(|(j, s)| {
                !used[*j] && equivalent(&s.to_module(), &t.to_module(), RTOL, 0).unwrap().verdict == Verdict::True
            });
            match hit {
                Some((j, s)) => {
                    used[j] = true;
                    worst = worst.max(s.distance(t));
                }
                None => worst = f64::INFINITY,
            }
        }
        c.bound(&format!("{name} yields the four scalars"), worst, 1e-9);
    }
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::default();
    let mut shape_bad = Vec::new();
    let mut oracle_bad = Vec::new();
    for seed in 0..20u64 {
        let mut g = rng(6000 + seed);
        for (rl, sl) in [(2usize, 3usize), (2, 2), (4, 6)] {
            let z = sample_aperiodic(rl, &mut g);
            let zt = sample_aperiodic(sl, &mut g);
            let ys = gp_fuse(&z, &zt).unwrap();
            let (h, l) = (gcd(rl, sl), rl / gcd(rl, sl) * sl);
            if ys.len() != h || ys.iter().any(|y| y.len() != l) {
                shape_bad.push(format!("seed {seed} ({rl},{sl})"));
            }
            if rl <= 3 && sl <= 4 {
                let p = boxtimes(&gp_module(&z).unwrap(), &gp_module(&zt).unwrap(), RTOL).unwrap();
                let sum = direct_sum_all(&ys.iter().map(|y| gp_module(y).unwrap()).collect::<Vec<_>>());
                let e = equivalent(&p, &sum, RTOL, seed).unwrap();
                if e.verdict != Verdict::True {
                    oracle_bad.push(format!("seed {seed} ({rl},{sl}): {}", e.reason));
                }
            }
        }
    }
    c.check("hcf vectors of length lcm", shape_bad.is_empty(), format!("{shape_bad:?}"));
    c.check("direct oracle is equivalent", oracle_bad.is_empty(), format!("{oracle_bad:?}"));

    let mut g = rng(6100);
    let z = sample_aperiodic(2, &mut g);
    let inv = GpVector::new(z.entries.iter().map(|s| s.inverse().unwrap()).collect());
    let ys = gp_fuse(&z, &inv).unwrap();
    let worst = ys[0].entries.iter().map(|s| s.distance(&ScalarModule::unit())).fold(0.0, f64::max);
    c.bound("inverse pair gives (1,1)", worst, 1e-10);
    c
}

fn eig2(m: &CMatrix) -> [C; 2] {
    let tr = m[(0, 0)] + m[(1, 1)];
    let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
    let disc = (tr * tr - det * 4.0).sqrt();
    [(tr + disc) / 2.0, (tr - disc) / 2.0]
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::default();
    let (mut eig_gap, mut cross_gap): (f64, f64) = (0.0, 0.0);
    let mut g = rng(7000);
    for w in prime_words(3) {
        for seed in 0..10u64 {
            let md = random_module(2, ModuleClass::N, 7100 + seed, 0).unwrap();
            let z = random_phase(&mut g);
            let label = AtomicLabel::new(&w, z).unwrap();
            let got = atomic_diffuse_fuse(&label, &md, RTOL).unwrap();
            let (va, vb) = (polar(md.a(), RTOL).unwrap().unitary, polar(md.b(), RTOL).unwrap().unitary);
            let mut v = CMatrix::identity(2);
            for ch in w.chars() {
                v = if ch == '0' { va.matmul(&v) } else { vb.matmul(&v) };
            }
            let want: Vec<C> = eig2(&v).iter().map(|phi| phi * z).collect();
            let phases: Vec<C> = got.iter().map(|l| l.phase()).collect();
            eig_gap = eig_gap.max(multiset_gap(&phases, &want));

            let p = boxtimes(&atomic_module(&label), &md, RTOL).unwrap();
            let found = atomic_part(&p, 3, RTOL).unwrap();
            let ok_words = found.iter().all(|a| a.label.word() == label.word() && a.dim() == 3);
            let fp: Vec<C> = found.iter().map(|a| a.label.phase()).collect();
            cross_gap = cross_gap.max(if ok_words { multiset_gap(&fp, &phases) } else { f64::INFINITY });
        }
    }
    c.bound("phases equal eig(V)·z", eig_gap, 1e-9);
    c.bound("agrees with boxtimes + atomic_part", cross_gap, 1e-9);

    let mut worst: f64 = 0.0;
    for w in prime_words(3).iter().chain(prime_words(2).iter()) {
        for _ in 0..10 {
            let s = random_scalar(&mut g);
            let z = random_phase(&mut g);
            let got = atomic_diffuse_fuse(&AtomicLabel::new(w, z).unwrap(), &s.to_module(), RTOL).unwrap();
            let k = w.chars().filter(|&ch| ch == '0').count() as i32;
            let (al, be) = (s.a / s.a.norm(), s.b / s.b.norm());
            let want = al.powi(k) * be.powi(w.len() as i32 - k) * z;
            worst = worst.max(if got.len() == 1 { (got[0].phase() - want).norm() } else { f64::INFINITY });
        }
    }
    c.bound("scalar case y = α^k β^(d-k) z", worst, 1e-12);
    c
}

fn rotation(theta: f64) -> CMatrix {
    let (s, co) = theta.sin_cos();
    CMatrix::from_real(2, 2, &[co, s, -s, co])
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::default();
    let (alpha, alpha_t) = (C::from_polar(1.0, 0.4), C::from_polar(1.0, -1.1));
    let (a, at, theta) = (0.6f64, 0.35f64, 0.7f64);
    let (ai, ati) = ((1.0 - a * a).sqrt(), (1.0 - at * at).sqrt());
    let rt = rotation(theta);
    let m = PModule::pair(
        CMatrix::from_diag(&[r(0.0), alpha * a]),
        rt.matmul(&CMatrix::from_real_diag(&[1.0, ai])),
    )
    .unwrap();
    let mt = PModule::pair(
        CMatrix::from_diag(&[alpha_t * at, r(0.0)]),
        rt.matmul(&CMatrix::from_real_diag(&[ati, 1.0])),
    )
    .unwrap();
    let n = boxtimes(&m, &mt, RTOL).unwrap();
    let rep = classify_parts(&n, 8, RTOL).unwrap();
    c.check("atomic_dim 1", rep.atomic_dimension == 1, format!("atomic_dim {}", rep.atomic_dimension));
    let label_ok = rep.atomic_labels.len() == 1
        && rep.atomic_labels[0].word() == "1"
        && (rep.atomic_labels[0].phase() - r(1.0)).norm() <= 1e-9;
    c.check("label (\"1\", 1)", label_ok, format!("{:?}", rep.atomic_labels));
    c.check("residual_dim 0", rep.residual_dimension == 0, format!("residual_dim {}", rep.residual_dimension));
    let diffuse_ok = rep.diffuse_dimension == 3
        && rep.diffuse_level.is_some()
        && is_irreducible(&n.restrict(&rep.diffuse));
    c.check(
        "3-dimensional diffuse irreducible complement",
        diffuse_ok,
        format!("diffuse_dim {}, certified at {:?}", rep.diffuse_dimension, rep.diffuse_level),
    );
    if rep.atomic_dimension == 1 {
        let minus = CMatrix::from_real(4, 1, &[FRAC_1_SQRT_2, 0.0, 0.0, -FRAC_1_SQRT_2]);
        let plus = CMatrix::from_real(4, 1, &[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]);
        let angle = subspace_angle(&rep.atomic, &minus);
        c.known_unattainable(
            "atom spans e1⊗e1 - e2⊗e2",
            angle <= 1e-8,
            format!(
                "angle {angle:.3e}; R⊗R fixes e1⊗e1 + e2⊗e2 instead, angle to it {:.3e}",
                subspace_angle(&rep.atomic, &plus)
            ),
        );
    }
    c
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::default();
    let (mut qd, mut zz, mut ev, mut evf): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    let mut bad = Vec::new();
    for seed in 0..20u64 {
        let d = 1 + (seed as usize) % 3;
        let m = random_module(d, ModuleClass::N, 9000 + seed, 0).unwrap();
        let rep = duality_check(&m, RTOL).unwrap();
        qd = qd.max((rep.quantum_dim - d as f64).abs());
        zz = zz.max(rep.zigzag_residual);
        ev = ev.max(rep.ev_residual);
        evf = evf.max((rep.ev_factor - r(FRAC_1_SQRT_2)).norm());
        let dd = dual_module(&dual_module(&m, RTOL).unwrap(), RTOL).unwrap();
        let e = equivalent(&dd, &m, RTOL, seed).unwrap();
        if e.verdict != Verdict::True {
            bad.push(format!("seed {seed}: {}", e.reason));
        }
    }
    c.bound("quantum_dim = d", qd, 1e-9);
    c.bound("zig-zag residual", zz, 1e-9);
    c.bound("single ev scalar fits both legs", ev, 1e-9);
    c.bound("ev_factor = 1/sqrt2", evf, 1e-9);
    c.check("dual(dual(m)) ≅ m", bad.is_empty(), format!("{bad:?}"));
    c
}

fn criterion_10() -> Criterion {
    let mut c = Criterion::default();
    let mut g = rng(10_000);
    let one = ScalarModule::unit();
    let (mut assoc, mut unit, mut inv, mut hom): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for _ in 0..1000 {
        let (x, y, z) = (random_scalar(&mut g), random_scalar(&mut g), random_scalar(&mut g));
        let bx = |p: &ScalarModule, q: &ScalarModule| p.boxtimes(q).unwrap();
        assoc = assoc.max(bx(&bx(&x, &y), &z).distance(&bx(&x, &bx(&y, &z))));
        unit = unit.max(bx(&x, &one).distance(&x)).max(bx(&one, &x).distance(&x));
        inv = inv.max(bx(&x, &x.inverse().unwrap()).distance(&one));
        let mut coords = || GroupCoords { u: random_phase(&mut g), v: random_phase(&mut g), t: g.gen_range(-5.0..5.0) };
        let (c1, c2) = (coords(), coords());
        hom = hom.max(bx(&scalar_coords_iso(&c1), &scalar_coords_iso(&c2)).distance(&scalar_coords_iso(&c1.compose(&c2))));
    }
    c.bound("associativity", assoc, 1e-12);
    c.bound("unit", unit, 1e-12);
    c.bound("inverse", inv, 1e-12);
    c.bound("coordinate isomorphism is a homomorphism", hom, 1e-12);
    c
}

fn criterion_11() -> Criterion {
    let mut c = Criterion::default();
    let (mut worst_res, mut assoc): (f64, f64) = (0.0, 0.0);
    let mut all_valid = true;
    for seed in 0..10u64 {
        let m1 = random_module(1 + (seed as usize) % 2, ModuleClass::N, 11_000 + seed, 0).unwrap();
        let m2 = kawamura(
            &random_module(1 + (seed as usize) % 2, ModuleClass::M, 11_100 + seed, 0).unwrap(),
            &random_module(1, ModuleClass::N, 11_200 + seed, 0).unwrap(),
        );
        let m3 = random_module(2, ModuleClass::M, 11_300 + seed, 1).unwrap();
        for k in [kawamura(&m1, &m2), kawamura(&m2, &m3), kawamura(&m1, &m3)] {
            let v = k.validate(RTOL);
            all_valid &= v.pass;
            worst_res = worst_res.max(v.residual);
        }
        assoc = assoc.max(gap(&kawamura(&kawamura(&m1, &m2), &m3), &kawamura(&m1, &kawamura(&m2, &m3))));
    }
    c.check("outputs validate", all_valid, format!("worst residual {worst_res:.2e}"));
    c.bound("associativity", assoc, 1e-10);

    let mut g = rng(11_500);
    let mut found = None;
    for attempt in 0..50 {
        let (x, y) = (random_scalar(&mut g).to_module(), random_scalar(&mut g).to_module());
        let e = equivalent(&kawamura(&x, &y), &kawamura(&y, &x), RTOL, attempt).unwrap();
        if e.verdict == Verdict::False {
            found = Some(attempt);
            break;
        }
    }
    c.check("an ordered pair is not symmetric", found.is_some(), format!("found at attempt {found:?}"));
    c
}

fn brute_prime_count(d: usize) -> usize {
    (0..1u32 << d)
        .filter(|&bits| {
            let w: Vec<u8> = (0..d).map(|i| ((bits >> (d - 1 - i)) & 1) as u8).collect();
            let rots: Vec<Vec<u8>> = (0..d).map(|k| [&w[k..], &w[..k]].concat()).collect();
            let primitive = (1..d).all(|k| rots[k] != w);
            primitive && rots.iter().all(|x| w <= *x)
        })
        .count()
}

fn criterion_12() -> Criterion {
    let mut c = Criterion::default();
    let mismatches: Vec<usize> = (1..=12).filter(|&d| prime_words(d).len() != brute_prime_count(d)).collect();
    c.check("counts match brute force for d <= 12", mismatches.is_empty(), format!("mismatch at {mismatches:?}"));
    let six = prime_words(6).len();
    c.check("d = 6 count is 9", six == 9, format!("{six}"));
    c
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Criterion); 12] = [
        ("Pythagorean identity", criterion_1),
        ("monoidal laws", criterion_2),
        ("P-dimension multiplicativity", criterion_3),
        ("non-full example", criterion_4),
        ("D2 display", criterion_5),
        ("GP fusion", criterion_6),
        ("atomic absorption", criterion_7),
        ("diffuse tensor to atom", criterion_8),
        ("duality", criterion_9),
        ("scalar Lie group", criterion_10),
        ("Kawamura product", criterion_11),
        ("prime words", criterion_12),
    ];
    let mut unexpected = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let crit = run();
        let pass = crit.checks.iter().all(|x| x.ok);
        println!("{} {:>2} {title}", if pass { "PASS" } else { "FAIL" }, k + 1);
        for x in &crit.checks {
            let mark = match (x.ok, x.known_unattainable) {
                (true, _) => "ok",
                (false, true) => "known unattainable",
                (false, false) => "failed",
            };
            println!("       {mark}: {} ({})", x.name, x.detail);
            if !x.ok && !x.known_unattainable {
                unexpected += 1;
            }
        }
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failing check(s)");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
