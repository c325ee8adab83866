//! Randomized property suites. Each run is a pure function of its
//! parameters and seed; failures carry the full witness so that they can be
//! replayed.

use num::{BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::apartment::{
    parahoric_oracle, stabilizer_membership, ApartmentPoint, MonomialMatrix,
    OrderedPartition,
};
use crate::compactification::{
    block_condition_oracle, boundary_stabilizes, sp_boundary_stabilizes,
    BoundaryPoint, FanDirection,
};
use crate::error::{Error, Result};
use crate::matrix::FieldMatrix;
use crate::rational::{format_rational, int};
use crate::sampling;
use crate::symplectic::{
    embed_point, in_sp_star_of_origin, is_symplectic, sp_parahoric_oracle, sp_stabilizer_membership,
    weyl_monomial, SpApartmentPoint,
};
use crate::tableaux::{schur_eval, Partition};
use crate::tropical::{
    non_action_witness, stabilizes_tropically, trop_add, trop_mul, tropicalize, valuation_inequality_oracle,
    TropScalar, TropVector,
};
use crate::valued_field::FieldSpec;
use crate::weights_fans::{
    cone_c_delta, fan_f_rho, normal_cone_member, skeleton_member, trop_hypersurface_member,
    vertices_of_polytope, weights_identity_sl, weights_irrep_sl, weights_standard_sp, weyl_orbit,
    WeightedCharacter,
};
use crate::weyl::WeylType;

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 8] = ["semiring", "prop24", "parahoric", "sp", "fans", "prop36", "boundary", "schur"];

const MAX_WITNESSES: usize = 10;

/// Outcome of one suite: `cases` checks, of which `positives` had a true
/// membership answer, and `failures` disagreements.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub params: Value,
    pub cases: usize,
    pub positives: usize,
    pub failures: usize,
    pub counterexamples: Vec<Value>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, params: Value) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            seed,
            params,
            cases: 0,
            positives: 0,
            failures: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records one check. `witness` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, positive: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if positive {
            self.positives += 1;
        }
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_WITNESSES {
                self.counterexamples.push(witness());
            }
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "seed": self.seed,
            "params": self.params,
            "cases": self.cases,
            "positives": self.positives,
            "failures": self.failures,
            "passed": self.passed(),
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        })
    }
}

/// Which representation a fan suite works with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rep {
    Identity(usize),
    Sp(usize),
    Schur(Partition, usize),
}

impl Rep {
    pub fn character(&self) -> Result<WeightedCharacter> {
        match self {
            Rep::Identity(n) => Ok(weights_identity_sl(*n)),
            Rep::Sp(n) => Ok(weights_standard_sp(*n)),
            Rep::Schur(lambda, n) => weights_irrep_sl(lambda, *n),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Rep::Identity(n) => json!({"rep": "identity", "n": n}),
            Rep::Sp(n) => json!({"rep": "sp", "n": n}),
            Rep::Schur(l, n) => json!({"rep": "schur", "lambda": l.parts(), "n": n}),
        }
    }
}

/// Parameters shared by all suites; each suite reads what it needs.
#[derive(Debug, Clone)]
pub struct SuiteParams {
    pub spec: FieldSpec,
    pub n: usize,
    pub count: usize,
    pub points: usize,
    pub seed: u64,
    pub rep: Rep,
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    let SuiteParams { spec, n, count, points, seed, .. } = params.clone();
    match name {
        "semiring" => Ok(semiring(count, seed)),
        "prop24" => Ok(merge("prop24", seed, vec![prop24(spec, n, count, points, seed), closure(spec, n, count, seed)])),
        "parahoric" => Ok(parahoric(spec, n, count, seed)),
        "sp" => Ok(symplectic_suite(spec, n, count, seed)),
        "fans" => fans(&params.rep, count, seed),
        "prop36" => prop36(&params.rep, spec, count, seed),
        "schur" => Ok(schur_suite(6, n.max(1), count, count, seed)),
        "boundary" => Ok(match params.rep {
            Rep::Sp(m) => sp_boundary(spec, m, count, seed),
            _ => boundary(spec, n, count, seed),
        }),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

fn merge(name: &str, seed: u64, parts: Vec<SuiteReport>) -> SuiteReport {
    let mut out = SuiteReport::new(name, seed, json!(parts.iter().map(|p| json!({"suite": p.suite, "params": p.params})).collect::<Vec<_>>()));
    for p in parts {
        out.cases += p.cases;
        out.positives += p.positives;
        out.failures += p.failures;
        out.counterexamples.extend(p.counterexamples);
        out.counterexamples.truncate(MAX_WITNESSES);
        out.notes.extend(p.notes.into_iter().map(|n| format!("{}: {n}", p.suite)));
    }
    out
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> TropScalar {
    if rng.gen_bool(0.15) {
        TropScalar::NegInf
    } else {
        TropScalar::Finite(sampling::rational(6, 5, rng))
    }
}

fn points_json(v: &[BigRational]) -> Value {
    json!(v.iter().map(format_rational).collect::<Vec<_>>())
}

/// Semiring laws, tropical homogeneity and the non-action witness.
pub fn semiring(count: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("semiring", seed, json!({"count": count}));
    let mut r = rng(seed);
    let zero = TropScalar::NegInf;
    let one = TropScalar::one();
    for _ in 0..count {
        let (a, b, c) = (random_scalar(&mut r), random_scalar(&mut r), random_scalar(&mut r));
        let laws = [
            trop_add(&a, &b) == trop_add(&b, &a),
            trop_add(&trop_add(&a, &b), &c) == trop_add(&a, &trop_add(&b, &c)),
            trop_add(&a, &a) == a,
            trop_mul(&a, &b) == trop_mul(&b, &a),
            trop_mul(&trop_mul(&a, &b), &c) == trop_mul(&a, &trop_mul(&b, &c)),
            trop_mul(&a, &trop_add(&b, &c)) == trop_add(&trop_mul(&a, &b), &trop_mul(&a, &c)),
            trop_add(&a, &zero) == a,
            trop_mul(&a, &zero) == zero,
            trop_mul(&a, &one) == a,
        ];
        rep.check(laws.iter().all(|&l| l), false, || {
            json!({"a": a.to_json(), "b": b.to_json(), "c": c.to_json(), "laws": laws.to_vec()})
        });
    }
    let spec = FieldSpec::qp(2).expect("prime");
    for _ in 0..count.min(200) {
        let n = r.gen_range(2..=4);
        let g = sampling::sl_element(spec, n, &mut r);
        let m = tropicalize(&g).expect("invertible");
        let x = sampling::trop_point(n, 6, 3, &mut r);
        let a = sampling::rational(6, 5, &mut r);
        let lhs = m.apply(&x.shift(&a)).expect("size");
        let rhs = m.apply(&x).expect("size").shift(&a);
        rep.check(lhs == rhs, false, || json!({"homogeneity": {"g": g.to_json(), "x": x.to_json(), "a": format_rational(&a)}}));
    }
    let (g, h) = non_action_witness(spec);
    let x = TropVector::from_rationals(&[int(1), int(0)]);
    let gh = tropicalize(&g.mul(&h).expect("size")).expect("invertible").apply(&x).expect("size");
    let composed = tropicalize(&g)
        .and_then(|gt| gt.apply(&tropicalize(&h)?.apply(&x)?))
        .expect("invertible");
    rep.check(gh != composed, true, || json!({"non_action": {"gh": gh.to_json(), "g(h(x))": composed.to_json()}}));
    rep
}

/// Tropical stabilization against the valuation inequalities on random
/// determinant-one matrices and random rational points.
pub fn prop24(spec: FieldSpec, n: usize, count: usize, points: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("prop24", seed, json!({"field": spec.to_json(), "n": n, "count": count, "points": points}));
    let mut r = rng(seed);
    for _ in 0..count {
        let g = sampling::sl_element(spec, n, &mut r);
        for k in 0..points {
            // every fourth point is built from the matrix's own torus part so
            // that positive answers occur
            let x = if k % 4 == 3 {
                TropVector::from_rationals(&sampling::rational_vector(n, 6, 1, &mut r))
            } else {
                sampling::trop_point(n, 6, 3, &mut r)
            };
            let a = stabilizes_tropically(&g, &x);
            let b = valuation_inequality_oracle(&g, &x);
            let positive = matches!(a, Ok(true));
            rep.check(a.is_ok() && a == b, positive, || {
                json!({"g": g.to_json(), "x": x.to_json(), "tropical": format!("{a:?}"), "oracle": format!("{b:?}")})
            });
        }
    }
    rep
}

/// Products and inverses of stabilizer elements still stabilize.
pub fn closure(spec: FieldSpec, n: usize, count: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("closure", seed, json!({"field": spec.to_json(), "n": n, "count": count}));
    let mut r = rng(seed ^ 0x9e37_79b9);
    for _ in 0..count {
        let v = sampling::rational_vector(n, 6, 2, &mut r);
        let x = TropVector::from_rationals(&v);
        let len = r.gen_range(1..=6);
        let g = sampling::stabilizer_element(spec, &v, len, &mut r);
        let h = sampling::stabilizer_element(spec, &v, len, &mut r);
        let holds = |m: &FieldMatrix| stabilizes_tropically(m, &x) == Ok(true);
        let hyp = holds(&g) && holds(&h);
        let gh = g.mul(&h).expect("size");
        let ginv = g.inverse().expect("invertible");
        rep.check(hyp && holds(&gh) && holds(&ginv), hyp, || {
            json!({"g": g.to_json(), "h": h.to_json(), "x": x.to_json(), "hypothesis": hyp})
        });
    }
    rep
}

/// Parahoric flag condition against tropical stabilization on every face of
/// the star of the origin, plus the Iwahori description for `n = 2`.
pub fn parahoric(spec: FieldSpec, n: usize, count: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("parahoric", seed, json!({"field": spec.to_json(), "n": n, "count": count}));
    let mut r = rng(seed);
    let faces = OrderedPartition::all(n);
    rep.note(format!("{} faces in the star of the origin", faces.len()));
    for face in &faces {
        let x = face.star_point();
        let mut samples: Vec<FieldMatrix> = Vec::with_capacity(3 * count);
        for _ in 0..count {
            let len = r.gen_range(1..=2 * n + 2);
            samples.push(sampling::integral_sl(spec, n, len, &mut r));
            samples.push(sampling::non_integral_sl(spec, n, &mut r));
            samples.push(sampling::stabilizer_element(spec, x.coords(), len, &mut r));
        }
        for g in samples {
            let a = parahoric_oracle(&g, &x);
            let b = stabilizer_membership(&g, &x);
            let c = valuation_inequality_oracle(&g, &x.to_trop_vector());
            rep.check(a.is_ok() && a == b && b == c, a == Ok(true), || {
                json!({"g": g.to_json(), "x": x.to_json(), "parahoric": format!("{a:?}"), "tropical": format!("{b:?}"), "oracle": format!("{c:?}")})
            });
        }
    }
    if n == 2 {
        let x = ApartmentPoint::new(vec![BigRational::new(1.into(), 4.into()), BigRational::new((-1).into(), 4.into())])
            .expect("nonempty");
        for _ in 0..count {
            let g = if r.gen_bool(0.5) {
                sampling::sl_element(spec, 2, &mut r)
            } else {
                sampling::stabilizer_element(spec, x.coords(), 3, &mut r)
            };
            let v = |i, j| g.get(i, j).valuation();
            use crate::valued_field::Valuation::Finite;
            let iwahori = v(0, 0) >= Finite(0) && v(0, 1) >= Finite(0) && v(1, 1) >= Finite(0) && v(1, 0) >= Finite(1);
            let member = stabilizer_membership(&g, &x);
            rep.check(member == Ok(iwahori), iwahori, || json!({"iwahori": {"g": g.to_json()}}));
        }
    }
    rep
}

/// `Sp_2n`: integrality at the origin, Weyl and torus equivariance, group
/// closure, the parahoric cross-check and, for `n = 1`, agreement with
/// `SL_2`.
pub fn symplectic_suite(spec: FieldSpec, n: usize, count: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("sp", seed, json!({"field": spec.to_json(), "n": n, "count": count}));
    let mut r = rng(seed);
    let origin = SpApartmentPoint::origin(n);
    for _ in 0..count {
        let g = sampling::sp_element(spec, n, &mut r);
        let symplectic = is_symplectic(&g) == Ok(true);
        let at_origin = sp_stabilizer_membership(&g, &origin);
        rep.check(symplectic && at_origin == Ok(g.is_integral()), g.is_integral(), || {
            json!({"origin": {"g": g.to_json()}})
        });

        let x = SpApartmentPoint::new(sampling::rational_vector(n, 4, 2, &mut r));
        let w = sampling::weyl_element(WeylType::C, n, &mut r);
        let m = weyl_monomial(spec, &w).expect("type C").to_matrix();
        let conj = m.conjugate(&g).expect("invertible");
        let lhs = sp_stabilizer_membership(&g, &x);
        let rhs = sp_stabilizer_membership(&conj, &x.act(&w));
        rep.check(lhs.is_ok() && lhs == rhs, lhs == Ok(true), || {
            json!({"weyl": {"g": g.to_json(), "x": x.to_json(), "perm": w.perm(), "signs": w.signs()}})
        });

        let t = sampling::sp_torus(spec, n, 2, &mut r);
        let shift: Vec<BigRational> = (0..n)
            .map(|i| match t.get(i, i).valuation() {
                crate::valued_field::Valuation::Finite(v) => int(-v),
                crate::valued_field::Valuation::Infinite => unreachable!("torus entries are nonzero"),
            })
            .collect();
        let moved = x.add_scaled(&int(1), &SpApartmentPoint::new(shift));
        let lhs = sp_stabilizer_membership(&g, &x);
        let rhs = sp_stabilizer_membership(&t.conjugate(&g).expect("invertible"), &moved);
        rep.check(lhs == rhs, false, || json!({"torus": {"g": g.to_json(), "t": t.to_json(), "x": x.to_json()}}));

        let len = r.gen_range(1..=5);
        let a = sampling::sp_stabilizer_element(spec, &x, len, &mut r);
        let b = sampling::sp_stabilizer_element(spec, &x, len, &mut r);
        let holds = |m: &FieldMatrix| sp_stabilizer_membership(m, &x) == Ok(true);
        let hyp = holds(&a) && holds(&b);
        let ok = hyp && holds(&a.mul(&b).expect("size")) && holds(&a.inverse().expect("invertible"));
        rep.check(ok, hyp, || json!({"closure": {"g": a.to_json(), "h": b.to_json(), "x": x.to_json()}}));

        let star = SpApartmentPoint::new(sampling::rational_vector(n, 8, 1, &mut r).iter().map(|c| c / int(2 * n as i64 + 2)).collect());
        if in_sp_star_of_origin(star.coords()) {
            let h = if r.gen_bool(0.5) {
                sampling::sp_integral(spec, n, len, &mut r)
            } else {
                sampling::sp_stabilizer_element(spec, &star, len, &mut r)
            };
            let p = sp_parahoric_oracle(&h, &star);
            let q = sp_stabilizer_membership(&h, &star);
            rep.check(p.is_ok() && p == q, p == Ok(true), || json!({"parahoric": {"g": h.to_json(), "x": star.to_json()}}));
        }
    }
    if n == 1 {
        for _ in 0..count {
            let g = sampling::sl_element(spec, 2, &mut r);
            let x = SpApartmentPoint::new(sampling::rational_vector(1, 6, 2, &mut r));
            let sl = stabilizer_membership(&g, &embed_point(&x));
            let sp = sp_stabilizer_membership(&g, &x);
            rep.check(sl.is_ok() && sl == sp, sp == Ok(true), || json!({"sl2": {"g": g.to_json(), "x": x.to_json()}}));
        }
    }
    rep
}

/// Vertices against the Weyl orbit, cone counts, `C_Δ(ρ)` against normal
/// cones on sampled points, and coverage.
pub fn fans(rep_kind: &Rep, count: usize, seed: u64) -> Result<SuiteReport> {
    let rho = rep_kind.character()?;
    let mut rep = SuiteReport::new("fans", seed, json!({"rep": rep_kind.to_json(), "count": count}));
    let mut r = rng(seed);
    let fan = fan_f_rho(&rho);
    let verts = vertices_of_polytope(&rho);
    let orbit = weyl_orbit(&rho, &rho.dominant_weight());
    rep.note(format!("{} maximal cones", fan.len()));
    rep.check(verts == orbit && fan.vertices() == verts, true, || {
        json!({"vertices": verts.iter().map(|w| w.to_json()).collect::<Vec<_>>(), "orbit": orbit.iter().map(|w| w.to_json()).collect::<Vec<_>>()})
    });
    let vertex_ok = verts.iter().all(|v| rho.multiplicity(v) == 1);
    rep.check(vertex_ok, true, || json!({"vertex multiplicities": rho.to_json()}));
    // every Weyl chamber cone lands on the cone of its extreme weight
    for w in rho.group().weyl_group() {
        let mu0 = rho.act(&w, &rho.dominant_weight())?;
        let c = cone_c_delta(&rho, &w)?;
        let stored = fan.cones().get(&mu0);
        rep.check(stored == Some(&c), false, || json!({"chamber": {"perm": w.perm(), "signs": w.signs(), "vertex": mu0.to_json()}}));
    }
    let cones: Vec<_> = fan.cones().iter().collect();
    let dim = rho.group().dim();
    for _ in 0..count {
        let x = sampled_point(dim, &mut r);
        let mut covered = false;
        for (mu0, cone) in &cones {
            let a = cone.contains(&rho.group().normalize_point(&x));
            let b = normal_cone_member(&rho, mu0, &x);
            covered |= a;
            rep.check(b == Ok(a), a, || json!({"x": points_json(&x), "vertex": mu0.to_json(), "cone": a, "normal": format!("{b:?}")}));
        }
        rep.check(covered, true, || json!({"uncovered": points_json(&x)}));
    }
    Ok(rep)
}

/// Mixes generic points with small-integer points that often sit on walls.
fn sampled_point<R: Rng + ?Sized>(dim: usize, r: &mut R) -> Vec<BigRational> {
    if r.gen_bool(0.5) {
        sampling::rational_vector(dim, 1, 2, r)
    } else {
        sampling::rational_vector(dim, 6, 3, r)
    }
}

/// Tropical character hypersurface against the codimension-one skeleton.
pub fn prop36(rep_kind: &Rep, spec: FieldSpec, count: usize, seed: u64) -> Result<SuiteReport> {
    let rho = rep_kind.character()?;
    let mut rep = SuiteReport::new("prop36", seed, json!({"rep": rep_kind.to_json(), "p": spec.p(), "count": count}));
    let mut r = rng(seed);
    let fan = fan_f_rho(&rho);
    let dim = rho.group().dim();
    for _ in 0..count {
        let x = sampled_point(dim, &mut r);
        let a = trop_hypersurface_member(&rho, spec, &x);
        let b = skeleton_member(&fan, &x);
        rep.check(a == b, a, || json!({"x": points_json(&x), "hypersurface": a, "skeleton": b}));
    }
    Ok(rep)
}

fn nonempty_subsets(n: usize) -> Vec<std::collections::BTreeSet<usize>> {
    (1u32..(1 << n))
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

/// An element fixing the boundary point `b`: elementary matrices inside the
/// stratum with valuations clearing the coordinate differences, arbitrary
/// elementary matrices in the columns outside the stratum, and unit tori.
pub fn boundary_stabilizer_element<R: Rng + ?Sized>(
    spec: FieldSpec,
    b: &BoundaryPoint,
    len: usize,
    r: &mut R,
) -> FieldMatrix {
    let n = b.dim();
    let x = b.coords().entries();
    let mut g = FieldMatrix::identity(spec, n);
    for _ in 0..len {
        let i = r.gen_range(0..n);
        let j = (i + r.gen_range(1..n)) % n;
        let step = match (x[i].as_finite(), x[j].as_finite()) {
            _ if r.gen_range(0..5) == 0 => sampling::unit_torus(spec, n, r),
            (_, None) => FieldMatrix::elementary(spec, n, i, j, sampling::element(spec, -3, 3, r)),
            (Some(xi), Some(xj)) => {
                let k = crate::rational::ceil_to_i64(&(xj - xi));
                FieldMatrix::elementary(spec, n, i, j, sampling::element_with_min_valuation(spec, k, r))
            }
            (None, Some(_)) => continue,
        };
        g = g.mul(&step).expect("size");
    }
    g
}

/// Boundary stabilization against the block oracle on every stratum,
/// consistency on the full stratum and monomial equivariance.
pub fn boundary(spec: FieldSpec, n: usize, count: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("boundary", seed, json!({"field": spec.to_json(), "n": n, "count": count}));
    let mut r = rng(seed);
    for stratum in nonempty_subsets(n) {
        for _ in 0..count {
            let v = sampling::rational_vector(n, 6, 2, &mut r);
            let b = BoundaryPoint::restrict(&v, &stratum).expect("nonempty stratum");
            let g = match r.gen_range(0..3) {
                0 => sampling::sl_element(spec, n, &mut r),
                1 => boundary_stabilizer_element(spec, &b, r.gen_range(1..=6), &mut r),
                _ => {
                    // a stabilizer times a random elementary matrix: near misses
                    let s = boundary_stabilizer_element(spec, &b, 3, &mut r);
                    let i = r.gen_range(0..n);
                    let j = (i + r.gen_range(1..n)) % n;
                    s.mul(&FieldMatrix::elementary(spec, n, i, j, sampling::element(spec, -2, 2, &mut r))).expect("size")
                }
            };
            let a = boundary_stabilizes(&g, &b);
            let o = block_condition_oracle(&g, &b);
            rep.check(a.is_ok() && a == o, a == Ok(true), || {
                json!({"g": g.to_json(), "b": b.to_json(), "tropical": format!("{a:?}"), "block": format!("{o:?}")})
            });
            if b.is_interior() {
                let x = ApartmentPoint::new(v.clone()).expect("nonempty");
                let s = stabilizer_membership(&g, &x);
                let t = valuation_inequality_oracle(&g, &x.to_trop_vector());
                rep.check(a == s && s == t, false, || json!({"interior": {"g": g.to_json(), "x": x.to_json()}}));
            }
            let perm = sampling::weyl_element(WeylType::A, n, &mut r).perm().to_vec();
            let w = MonomialMatrix::signed_permutation(spec, perm.clone()).expect("permutation").to_matrix();
            let moved = boundary_stabilizes(&w.conjugate(&g).expect("invertible"), &b.permute(&perm));
            rep.check(moved == a, false, || json!({"equivariance": {"g": g.to_json(), "b": b.to_json(), "perm": perm}}));
        }
    }
    rep
}

/// Fan directions through the vectors of `{-1, 0, 1}^n`, one per face.
pub fn directions(fan: &crate::weights_fans::Fan) -> Vec<FanDirection> {
    let dim = fan.group().dim();
    let mut out: Vec<FanDirection> = Vec::new();
    let total = 3usize.pow(dim as u32);
    for code in 0..total {
        let c: Vec<BigRational> = (0..dim)
            .map(|i| int((code / 3usize.pow(i as u32) % 3) as i64 - 1))
            .collect();
        let d = FanDirection::from_point(fan, &c).expect("right size");
        if !out.iter().any(|o| o.cone() == d.cone()) {
            out.push(d);
        }
    }
    out
}

/// Limit coherence along every fan direction of the standard representation
/// of `Sp_2n`, and the trivial direction against the apartment predicate.
pub fn sp_boundary(spec: FieldSpec, n: usize, count: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("sp_boundary", seed, json!({"field": spec.to_json(), "n": n, "count": count}));
    let mut r = rng(seed);
    let fan = fan_f_rho(&weights_standard_sp(n));
    let dirs = directions(&fan);
    rep.note(format!("{} directions", dirs.len()));
    for d in &dirs {
        let trivial = d.point().iter().all(|c| c.is_zero());
        let c = SpApartmentPoint::new(d.point().to_vec());
        for _ in 0..count {
            let x = if r.gen_bool(0.5) {
                SpApartmentPoint::origin(n)
            } else {
                SpApartmentPoint::new(sampling::rational_vector(n, 4, 1, &mut r))
            };
            // generic elements rarely fix a long segment, so a share of the
            // draws come from integral words and from the stabilizer of x
            let g = match r.gen_range(0..4) {
                0 | 1 => sampling::sp_element(spec, n, &mut r),
                2 => sampling::sp_integral(spec, n, r.gen_range(1..=2 * n + 2), &mut r),
                _ => sampling::sp_stabilizer_element(spec, &x, r.gen_range(1..=2 * n + 2), &mut r),
            };
            let concl = sp_boundary_stabilizes(&g, &x, d);
            if trivial {
                let base = sp_stabilizer_membership(&g, &x);
                // positives count only the limit hypothesis below
                rep.check(concl.is_ok() && concl == base, false, || {
                    json!({"trivial": {"g": g.to_json(), "x": x.to_json()}})
                });
                continue;
            }
            let hyp = (0..=10).all(|s| sp_stabilizer_membership(&g, &x.add_scaled(&int(s), &c)) == Ok(true));
            rep.check(concl.is_ok() && (!hyp || concl == Ok(true)), hyp, || {
                json!({"limit": {"g": g.to_json(), "x": x.to_json(), "c": points_json(d.point())}})
            });
        }
    }
    rep
}

/// `S_(1,0,…,0) = Σ z_i`, and the tableau expansion against the bialternant for
/// every partition of size at most `max_size` in at most `max_vars` variables.
pub fn schur_suite(max_size: usize, max_vars: usize, linear: usize, count: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new(
        "schur",
        seed,
        json!({"max_size": max_size, "max_vars": max_vars, "linear": linear, "count": count}),
    );
    let mut r = rng(seed);
    let distinct = |n: usize, r: &mut ChaCha8Rng| loop {
        let z = sampling::rational_vector(n, 5, 4, r);
        if (0..n).all(|i| !z[i + 1..].contains(&z[i])) && z.iter().all(|c| !c.is_zero()) {
            break z;
        }
    };
    for _ in 0..linear {
        let n = r.gen_range(1..=max_vars);
        let z = distinct(n, &mut r);
        let s = schur_eval(&Partition::standard(n), &z).expect("one part");
        let sum: BigRational = z.iter().sum();
        rep.check(s.tableaux == sum && s.agree(), false, || json!({"linear": points_json(&z)}));
    }
    for n in 1..=max_vars {
        for m in 0..=max_size {
            for lambda in Partition::all(m, n) {
                for _ in 0..count {
                    let z = distinct(n, &mut r);
                    let s = schur_eval(&lambda, &z).expect("fits");
                    rep.check(s.bialternant.is_some() && s.agree(), false, || {
                        json!({"lambda": lambda.parts(), "z": points_json(&z)})
                    });
                }
            }
        }
    }
    rep
}

/// Field from its command-line name and characteristic.
pub fn parse_spec(kind: &str, p: u64) -> Result<FieldSpec> {
    match kind {
        "qp" => FieldSpec::qp(p),
        "fpt" => FieldSpec::fpt(p),
        other => Err(Error::Parse(format!("unknown field `{other}`, expected qp or fpt"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let q5 = FieldSpec::qp(5).unwrap();
        assert!(semiring(50, 1).passed());
        let p = prop24(q5, 3, 10, 5, 2);
        assert!(p.passed(), "{:?}", p.counterexamples);
        assert!(closure(q5, 3, 10, 3).passed());
        assert!(parahoric(q5, 2, 5, 4).passed());
        assert!(symplectic_suite(q5, 1, 10, 5).passed());
        assert!(fans(&Rep::Sp(2), 20, 6).unwrap().passed());
        assert!(prop36(&Rep::Identity(3), q5, 20, 7).unwrap().passed());
        assert!(schur_suite(3, 2, 5, 2, 8).passed());
    }

    #[test]
    fn unknown_suite() {
        let params = SuiteParams {
            spec: FieldSpec::qp(2).unwrap(),
            n: 2,
            count: 1,
            points: 1,
            seed: 0,
            rep: Rep::Identity(2),
        };
        assert_eq!(run_suite("nope", &params), Err(Error::UnknownSuite("nope".into())));
    }

    #[test]
    fn sp4_has_nine_directions() {
        let fan = fan_f_rho(&weights_standard_sp(2));
        let dirs = directions(&fan);
        assert_eq!(dirs.len(), 9);
        let mut dims: Vec<usize> = dirs.iter().map(|d| d.cone().dimension()).collect();
        dims.sort();
        assert_eq!(dims, vec![0, 1, 1, 1, 1, 2, 2, 2, 2]);
    }
}
