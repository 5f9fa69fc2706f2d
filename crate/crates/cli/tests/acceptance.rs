// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All comparisons are exact.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ela_core::corpus::*;
use ela_core::ela::{
    adjoint_rep, adjoint_rep_with_prefactor, beta_transform, check_ela, check_morphism, check_quadratic,
    compose_morphisms, ElaMorphism,
};
use ela_core::json::{ela_to_json, lie2_to_json, render};
use ela_core::leibniz::{leibniz_h2, loday_coboundary, LeibnizModule, LodayCochain};
use ela_core::lie2::{bar_d, check_lie2, functor_naturality_check, functor_objects, lie2_beta_transform, Lie2Cochain};
use ela_core::linalg::matrix::{unit_vector, vec_sub};
use ela_core::linalg::{kernel, BilinearMap, Matrix, Subspace};
use ela_core::random::*;
use ela_core::structure::*;

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < budget, || format!("took {took:?}, budget {budget:?}"))
}

fn end2_check_cli() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_ela"))
        .args(["check", "corpus:end2", "--extended"])
        .output()
        .map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(1))?;
    ensure(out.status.code() == Some(0), || format!("exit status {:?}", out.status.code()))?;
    ensure(out.stdout == b"[]\n", || String::from_utf8_lossy(&out.stdout).into_owned())?;
    let e = example_end2();
    let r = check_ela(&e, true);
    ensure(r.passed(), || r.to_string())?;
    let k = kernel(e.t()).dim();
    ensure(k == 1, || format!("dim ker t = {k}"))?;
    Ok(format!("{:?}", start.elapsed()))
}

fn round_trip(e: &ela_core::ela::ELA) -> Result<(), String> {
    let d = decompose(e).map_err(|x| x.to_string())?;
    let rec = reconstruct(&d).map_err(|x| x.to_string())?;
    let f = rec.from_source.ok_or("no forward morphism")?;
    let g = rec.to_source.ok_or("no backward morphism")?;
    let r = check_morphism(e, &rec.ela, &f);
    ensure(r.passed(), || format!("forward: {r}"))?;
    let r = check_morphism(&rec.ela, e, &g);
    ensure(r.passed(), || format!("backward: {r}"))?;
    let id = compose_morphisms(&f, &g).map_err(|x| x.to_string())?;
    ensure(id == ElaMorphism::identity(e), || "composite is not the identity".into())
}

fn structure_round_trip() -> Outcome {
    let start = Instant::now();
    round_trip(&example_end2())?;
    let mut r = rng(1001);
    for n in 0..100 {
        let e = random_sela(&mut r);
        ensure(e.dim_v() <= 6 && e.dim_w() <= 6, || format!("sample {n} too large"))?;
        round_trip(&e).map_err(|m| format!("sample {n}: {m}"))?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("end2 + 100 sELAs in {:?}", start.elapsed()))
}

fn flat(b: &BilinearMap) -> Vec<ela_core::linalg::Rational> {
    flatten_bilinear(b)
}

fn plane_cohomology() -> Outcome {
    let e = example_end2();
    let d = decompose(&e).map_err(|x| x.to_string())?;
    ensure(d.g.bracket().is_zero() && d.dim_g() == 2, || "g is not the abelian plane".into())?;
    let m = &d.module_action;
    ensure(
        m.rho_l()[0] == Matrix::from_ints(&[&[1, 0], &[0, -1]]) && m.rho_l()[1].is_zero(),
        || "action is not (xa, -xb)".into(),
    )?;
    let loday = leibniz_h2(&d.g, m).map_err(|x| x.to_string())?;
    ensure(loday.dimension == 0, || format!("Loday H2 dimension {}", loday.dimension))?;

    let h = d_cohomology(&d.algebra, &d.ideal_i, 1).map_err(|x| x.to_string())?;
    ensure(h.dimension == 3, || format!("d-cohomology dimension {}", h.dimension))?;
    let s = &d.g_section;
    let restricted: Vec<_> = h.representatives.iter().map(|r| flat(&r.pullback(s, s))).collect();
    let got = Subspace::span(4, &restricted);
    let forms = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        .map(|(a, b, c)| flat(&QuadraticFormTwoVars::from_epsilons(a, b, c).to_bilinear()));
    let want = Subspace::span(4, &forms);
    ensure(got.dim() == 3 && got.contains(&want) && want.contains(&got), || {
        "representatives do not span x^2, xy, y^2 on g x g".into()
    })?;

    // cocycles vanishing on g x g are exactly the coboundaries
    let restrict = Matrix::from_columns(
        4,
        &h.cocycles.iter().map(|c| flat(&c.pullback(s, s))).collect::<Vec<_>>(),
    );
    let combos = kernel(&restrict);
    let full = Matrix::from_columns(
        flat(&h.cocycles[0]).len(),
        &h.cocycles.iter().map(flat).collect::<Vec<_>>(),
    );
    let mixed = combos.image_under(&full);
    let cob = &h.flat.coboundaries;
    ensure(mixed.contains(cob) && cob.contains(&mixed), || {
        format!("mixed sector has dim {}, coboundaries {}", mixed.dim(), cob.dim())
    })?;
    Ok(format!("Loday 0, d-complex 3, mixed = coboundaries (dim {})", cob.dim()))
}

fn end2_atoms() -> Outcome {
    let e = example_end2();
    let d = decompose(&e).map_err(|x| x.to_string())?;
    let q = QuadraticFormTwoVars::from_bilinear(&d.delta_g).map_err(|x| x.to_string())?;
    ensure(q == QuadraticFormTwoVars::from_epsilons(0, 1, 0), || format!("delta_g = {q}"))?;
    ensure(d.delta_mix.is_zero(), || "delta_mix is not zero".into())?;
    ensure(d.alpha.is_zero(), || "alpha is not zero".into())?;
    ensure(d.dim_g() == 2 && d.g.bracket().is_zero(), || "g is not abelian of dim 2".into())?;
    let (atoms, m) = example_a1_isomorphism();
    let rec = reconstruct(&atoms).map_err(|x| x.to_string())?;
    let r = check_morphism(&rec.ela, &e, &m);
    ensure(r.passed(), || r.to_string())?;
    Ok("y^2, 0, 0, abelian plane; explicit isomorphism checks".into())
}

fn functor_validity() -> Outcome {
    let start = Instant::now();
    for name in CORPUS_NAMES {
        let a = functor_objects(&by_name(name).unwrap()).map_err(|x| x.to_string())?;
        let r = check_lie2(&a);
        ensure(r.passed(), || format!("{name}: {r}"))?;
    }
    let mut rg = rng(1005);
    for n in 0..200 {
        let e = random_ela(&mut rg);
        ensure(e.dim_v() <= 6 && e.dim_w() <= 6, || format!("sample {n} too large"))?;
        let a = functor_objects(&e).map_err(|x| x.to_string())?;
        let r = check_lie2(&a);
        ensure(r.passed(), || format!("sample {n}: {r}"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} corpus + 200 random in {:?}", CORPUS_NAMES.len(), start.elapsed()))
}

fn anomaly_identities() -> Outcome {
    let mut rg = rng(1006);
    let (mut jac, mut anti, mut act, mut closed, mut nonzero) = (0, 0, 0, 0, 0);
    let samples = 30;
    for _ in 0..samples {
        let e = random_sela(&mut rg);
        let a = functor_objects(&e).map_err(|x| x.to_string())?;
        let (n, m) = (a.dim_v(), a.dim_w());
        let ev = |k: usize, i: usize| unit_vector(k, i);
        let mut jac_ok = true;
        let mut act_ok = true;
        for x in 0..n {
            for y in 0..n {
                let (x_, y_) = (ev(n, x), ev(n, y));
                for z in 0..n {
                    let z_ = ev(n, z);
                    let defect = vec_sub(
                        &vec_sub(&a.bracket(&x_, &a.bracket(&y_, &z_)), &a.bracket(&a.bracket(&x_, &y_), &z_)),
                        &a.bracket(&y_, &a.bracket(&x_, &z_)),
                    );
                    jac_ok &= defect == a.t.mul_vec(&a.l3.basis_value(x, y, z));
                }
                for w in 0..m {
                    let w_ = ev(m, w);
                    let defect = vec_sub(
                        &vec_sub(&a.act(&x_, &a.act(&y_, &w_)), &a.act(&y_, &a.act(&x_, &w_))),
                        &a.act(&a.bracket(&x_, &y_), &w_),
                    );
                    act_ok &= defect == a.anomaly(&x_, &y_, &a.t.column(w));
                }
            }
        }
        nonzero += !a.l3.is_zero() as usize;
        jac += jac_ok as usize;
        act += act_ok as usize;
        anti += a.l3.is_totally_antisymmetric() as usize;
        closed += bar_d(&a, &Lie2Cochain::from_trilinear(&a.l3)).is_zero() as usize;
    }
    let all = [("jacobiator", jac), ("antisymmetry", anti), ("action defect", act), ("closedness", closed)];
    for (name, count) in all {
        ensure(count == samples, || format!("{name} held on {count}/{samples}"))?;
    }
    Ok(format!("4 identities on {samples} sELAs, {nonzero} with nonzero anomaly"))
}

fn naturality() -> Outcome {
    let mut rg = rng(1007);
    for n in 0..100 {
        let e = random_ela(&mut rg);
        let b = random_beta(&mut rg, e.dim_v(), e.dim_w());
        let left = functor_objects(&beta_transform(&e, &b).map_err(|x| x.to_string())?).map_err(|x| x.to_string())?;
        let right = lie2_beta_transform(&functor_objects(&e).map_err(|x| x.to_string())?, &b).map_err(|x| x.to_string())?;
        ensure(left == right, || format!("pair {n}: tensors differ"))?;
        let r = functor_naturality_check(&e, &b).map_err(|x| x.to_string())?;
        ensure(r.passed(), || format!("pair {n}: {r}"))?;
    }
    Ok("100 pairs".into())
}

fn non_injectivity() -> Outcome {
    let (e1, e2) = example_ela_pair();
    ensure(render(&ela_to_json(&e1)) != render(&ela_to_json(&e2)), || "sources coincide".into())?;
    let a = render(&lie2_to_json(&functor_objects(&e1).map_err(|x| x.to_string())?));
    let b = render(&lie2_to_json(&functor_objects(&e2).map_err(|x| x.to_string())?));
    ensure(a.as_bytes() == b.as_bytes(), || "images differ".into())?;
    Ok(format!("{} identical bytes", a.len()))
}

fn classification() -> Outcome {
    for k in 1..=5 {
        let e = classification_representative(k).map_err(|x| x.to_string())?;
        let r = check_ela(&e, false);
        ensure(r.passed(), || format!("representative {k}: {r}"))?;
        let d = decompose(&e).map_err(|x| x.to_string())?;
        let q = QuadraticFormTwoVars::from_bilinear(&d.delta_g).map_err(|x| x.to_string())?;
        let [a, b, c] = REPRESENTATIVE_EPSILONS[k - 1];
        ensure(q == QuadraticFormTwoVars::from_epsilons(a, b, c), || format!("representative {k}: recovered {q}"))?;
        let class = canonical_delta_class(&q);
        ensure(class.representative() == q && class.representative_index() == Some(k), || {
            format!("representative {k} is not fixed")
        })?;
    }
    let mut rg = rng(1009);
    let mut normalized = 0;
    for class in DeltaClass::ALL {
        let rep = class.representative();
        for _ in 0..50 {
            let (a, b, c) = (small_nonzero(&mut rg), small_nonzero(&mut rg), small_rational(&mut rg));
            let q = delta_g_action(&rep, &a, &b, &c).map_err(|x| x.to_string())?;
            ensure(canonical_delta_class(&q) == class, || format!("{q} left the class {class}"))?;
            if let Some((a, b, c)) = normalizing_parameters(&q) {
                let back = delta_g_action(&q, &a, &b, &c).map_err(|x| x.to_string())?;
                ensure(back == rep, || format!("{q} normalizes to {back}"))?;
                normalized += 1;
            }
        }
    }
    Ok(format!("5 representatives; {} actions, {normalized} normalized back", 50 * DeltaClass::ALL.len()))
}

fn differentials() -> Outcome {
    let mut rg = rng(1010);
    for n in 0..100 {
        let (l, _) = random_couple(&mut rg, 3, 3);
        let u = 1 + n % 2;
        let delta = DCochain1 { delta: random_matrix(&mut rg, u, l.dim()) };
        let dd = d2(&l, &d1(&l, &delta).map_err(|x| x.to_string())?).map_err(|x| x.to_string())?;
        ensure(dd.is_zero(), || format!("triple {n}: d2 d1 != 0"))?;

        let g = random_lie_algebra(&mut rg, 3);
        let m = random_module(&mut rg, &g, 3);
        for p in 0..=2usize {
            let cols = g.dim().pow(p as u32);
            let f = LodayCochain::new(p, g.dim(), random_matrix(&mut rg, m.dim_m(), cols)).map_err(|x| x.to_string())?;
            let once = loday_coboundary(&m, &f).map_err(|x| x.to_string())?;
            let twice = loday_coboundary(&m, &once).map_err(|x| x.to_string())?;
            ensure(twice.is_zero(), || format!("triple {n}: d_L d_L != 0 in degree {p}"))?;
        }
        let bi = LeibnizModule::bi_adjoint(&l);
        let f = LodayCochain::new(1, l.dim(), random_matrix(&mut rg, l.dim(), l.dim())).map_err(|x| x.to_string())?;
        let twice = loday_coboundary(&bi, &loday_coboundary(&bi, &f).map_err(|x| x.to_string())?).map_err(|x| x.to_string())?;
        ensure(twice.is_zero(), || format!("triple {n}: d_L d_L != 0 on the bi-adjoint module"))?;

        let lin = random_matrix(&mut rg, u, l.dim());
        let dl = loday_coboundary(&LeibnizModule::trivial(&l, u), &LodayCochain::from_linear(&lin))
            .map_err(|x| x.to_string())?;
        let sym = d1(&l, &DCochain1 { delta: lin }).map_err(|x| x.to_string())?;
        ensure(sym.delta() == &dl.to_bilinear().symmetric_part(), || {
            format!("triple {n}: d1 is not the symmetrized Loday coboundary")
        })?;
    }
    Ok("100 triples".into())
}

fn quadratic() -> Outcome {
    let mut rg = rng(1011);
    let (mut abelian, mut compact) = (0, 0);
    for n in 0..20 {
        let data = random_quadratic_data(&mut rg);
        if data.g.bracket().is_zero() {
            abelian += 1;
        } else {
            compact += 1;
        }
        let h = positive_quadratic_hypotheses(&data);
        ensure(h.passed(), || format!("input {n}: {h}"))?;
        let q = build_positive_quadratic(&data).map_err(|x| x.to_string())?;
        let r = check_ela(&q.base, true);
        ensure(r.passed(), || format!("input {n}: {r}"))?;
        let r = check_quadratic(&q);
        ensure(r.passed(), || format!("input {n}: {r}"))?;

        let l = q.base.algebra();
        let s = left_ideal_generated(l, &[random_vector(&mut rg, l.dim())]);
        let perp = orthogonal_left_ideal(l, &q.kappa_v, &s).map_err(|x| x.to_string())?;
        ensure(is_left_ideal(l, &perp) && perp.dim() + s.dim() == l.dim(), || {
            format!("input {n}: orthogonal complement is not a complementary left ideal")
        })?;
    }
    ensure(abelian > 0 && compact > 0, || format!("{abelian} abelian, {compact} compact inputs"))?;
    Ok(format!("{abelian} abelian + {compact} compact inputs"))
}

fn negatives() -> Outcome {
    for ax in PERTURBED_AXIOMS {
        let bad = perturbed_end2(ax).ok_or_else(|| format!("no perturbation for {ax}"))?;
        let got: Vec<String> = check_ela(&bad, false).failed_axioms().into_iter().collect();
        ensure(got == vec![ax.to_string()], || format!("perturbing {ax} failed {got:?}"))?;
    }
    let g = sl2();
    let m = LeibnizModule::adjoint(&g);
    ensure(!m.rho_l().iter().all(|x| x.is_zero()), || "module is trivial".into())?;
    let e = hemisemidirect_ela(&g, &m).map_err(|x| x.to_string())?;
    let (_, on_w) = adjoint_rep(&e).map_err(|x| x.to_string())?;
    ensure(on_w.check().passed(), || "factor 2 does not give a representation".into())?;
    let (_, halved) = adjoint_rep_with_prefactor(&e, &1.into()).map_err(|x| x.to_string())?;
    ensure(halved.check().fails("LLM"), || "factor 1 still satisfies LLM".into())?;
    Ok(format!("{} axioms; factor 1 breaks LLM", PERTURBED_AXIOMS.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("end2 passes the extended check, dim ker t = 1, under 1 s", end2_check_cli),
        ("decompose/reconstruct round trip on end2 and 100 sELAs", structure_round_trip),
        ("plane cohomology: Loday 0, d-complex 3, sectors", plane_cohomology),
        ("end2 atoms and the explicit isomorphism", end2_atoms),
        ("Lie-2 image passes all axioms on corpus and 200 ELAs", functor_validity),
        ("anomaly identities on random sELAs", anomaly_identities),
        ("naturality under twists", naturality),
        ("two ELAs with byte-identical Lie-2 images", non_injectivity),
        ("classification of the binary form", classification),
        ("differentials square to zero and agree", differentials),
        ("positive quadratic builder and orthogonal left ideals", quadratic),
        ("single-axiom perturbations and the factor two", negatives),
    ];
    let mut failed = 0;
    for (n, (label, run)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match result {
            Ok(note) => println!("PASS {:>2} {label} ({note})", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {label}: {why}", n + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
