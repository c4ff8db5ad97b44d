//! One function per verification suite.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::appendix_search::{
    eigen_bound_certificate, entry_domain, factor_normalization, f_prime, stabilizer_search,
    SEEDS,
};
use crate::building::{
    act, ball, chamber_report, generator_words_match, label, label_cocycle, letter_search,
    neighbors, transitivity_certificate, Filter, Letters, Vertex,
};
use crate::cmsz_generators::{
    chamber_certificate_passes, chamber_stabilizer_certificate, generator_factors,
    triangle_presentation, SCALAR_PRODUCTS,
};
use crate::division_algebra::{
    b_checks, det_square_check, embed_check, gstar_membership, nu2, order_and_pairing_checks,
    sigma_check, star_check, DElemQ, SAMPLE_PAIRS,
};
use crate::error::{Error, Result};
use crate::finite_ring::{reduce_matrix, scalar_image, Level, R1Mat};
use crate::finite_unitary::{
    corrected_b1_word, corrected_relations, degenerate_form_group_order, det_image_check,
    enumerate_u0, h_image_irreducible, level0_image, expected_rho_bar, expected_tau_bar,
    quaternion_check, relation_suite, structure_check, torsion_certificate, Relation, MODEL_ORDER,
    U0_ORDER, U1_ORDER, U1_PLUS_ORDER,
};
use crate::hermitian_core::{charpoly, q_form, rat, twist_check, QuadMat};

use super::{Claim, Context, Status, Suite};

/// Suite names in the order `verify-all` runs them.
pub const SUITES: [&str; 8] = [
    "verify-generators",
    "verify-reduction",
    "verify-building",
    "verify-unitary",
    "classify-subgroups",
    "verify-torsion",
    "appendix-search",
    "verify-algebra",
];

pub fn run_suite(ctx: &Context, name: &str) -> Result<Suite> {
    let claims = match name {
        "verify-generators" => generators(ctx)?,
        "verify-reduction" => reduction(ctx)?,
        "verify-building" => building(ctx)?,
        "verify-unitary" => unitary(ctx)?,
        "classify-subgroups" => classify(ctx)?,
        "verify-torsion" => torsion(ctx)?,
        "appendix-search" => appendix(ctx)?,
        "verify-algebra" => algebra()?,
        other => return Err(Error::Invalid(format!("unknown suite {other}"))),
    };
    Ok(Suite {
        name: name.to_string(),
        claims,
    })
}

fn mat_q(g: &QuadMat) -> Value {
    json!(g.m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn mat_r1(g: &R1Mat) -> Value {
    json!(g.m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn relations_value(rs: &[Relation]) -> Value {
    json!(rs
        .iter()
        .map(|r| json!({"group": r.group, "statement": r.statement, "holds": r.holds}))
        .collect::<Vec<_>>())
}

fn failing(rs: &[Relation]) -> Vec<String> {
    rs.iter().filter(|r| !r.holds).map(|r| r.statement.clone()).collect()
}

fn generators(ctx: &Context) -> Result<Vec<Claim>> {
    let set = ctx.generators();
    let tau_rel: Vec<bool> = (0..7).map(|i| set.tau_relation_holds(i)).collect();
    let products: Vec<Value> = SCALAR_PRODUCTS
        .iter()
        .map(|&(t, half)| {
            let p = set.triple(t);
            let ok = if half {
                p == crate::cmsz_generators::half_lambda_scalar()
            } else {
                p == QuadMat::identity()
            };
            json!({"triple": [t.0, t.1, t.2], "scalar": if half {"l/2"} else {"1"}, "holds": ok})
        })
        .collect();
    let products_ok = products.iter().all(|v| v["holds"] == json!(true));
    let f = triangle_presentation(set)?;
    let factors = generator_factors(set)?;
    let cases = chamber_stabilizer_certificate(set);
    Ok(vec![
        Claim::new(
            "generators.relations",
            "tau^-1 g_2i tau = g_i for all i, and the nine triple products are scalar",
            Status::of(tau_rel.iter().all(|&b| b) && products_ok),
            json!({"tau_relations": tau_rel, "products": products,
                   "rho": mat_q(&set.rho), "tau": mat_q(&set.tau)}),
        ),
        Claim::new(
            "generators.triangle_presentation",
            "The rotation closure of the scalar triples has 21 elements, each multiplying to I or (l/2)I",
            Status::of(f.len() == 21 && f.rotation_closed()),
            json!({"size": f.len(), "triples": f.triples.iter().map(|t| [t.0, t.1, t.2]).collect::<Vec<_>>()}),
        ),
        Claim::new(
            "generators.similitude",
            "Every g_i is a unitary similitude of Q with positive factor",
            Status::of(factors.iter().all(|c| c > &rat(0, 1))),
            json!(factors.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        ),
        Claim::new(
            "generators.chamber_stabilizers",
            "Among (g_i tau^j)^9 for i in {1,3}, only (g_3)^9 is scalar",
            Status::of(chamber_certificate_passes(&cases)),
            json!(cases.iter().map(|c| json!({"i": c.i, "j": c.j, "ninth_power_scalar": c.ninth_power_scalar})).collect::<Vec<_>>()),
        ),
    ])
}

fn reduction(ctx: &Context) -> Result<Vec<Claim>> {
    let tw = twist_check();
    let cp = charpoly(&q_form())?;
    let set = ctx.generators();
    let rb = reduce_matrix(&set.rho, Level::One);
    let tb = reduce_matrix(&set.tau, Level::One);
    let scalars = scalar_image();
    Ok(vec![
        Claim::new(
            "reduction.twist",
            "Phi* Q Phi equals the expected form Q', with det Phi = 28",
            Status::of(tw.passed()),
            json!({"det_phi": tw.det_phi.to_string(), "q_prime": mat_q(&tw.computed),
                   "mismatches": tw.mismatches}),
        ),
        Claim::new(
            "reduction.charpoly",
            "The characteristic polynomial of Q is t^3 - 30t^2 + 210t - 300",
            Status::of(cp == [rat(1, 1), rat(-30, 1), rat(210, 1), rat(-300, 1)]),
            json!(cp.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        ),
        Claim::new(
            "reduction.images",
            "The level-1 reductions of rho and tau through the twist equal the expected matrices",
            Status::of(rb == expected_rho_bar() && tb == expected_tau_bar()),
            json!({"rho_bar": mat_r1(&rb), "tau_bar": mat_r1(&tb)}),
        ),
        Claim::new(
            "reduction.scalars",
            "The scalars in the image are the six units of F3[t]/(t^2)",
            Status::of(scalars.len() == 6),
            json!(scalars.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        ),
    ])
}

fn building(ctx: &Context) -> Result<Vec<Claim>> {
    let cfg = ctx.cfg;
    let set = ctx.generators();
    let base = Vertex::base();
    let nbrs: BTreeSet<Vertex> = neighbors(&base, cfg)?.into_iter().collect();
    let mut images = BTreeSet::new();
    for i in 0..7 {
        images.insert(act(&set.g[i], &base, cfg)?);
        images.insert(act(&set.inverse(i), &base, cfg)?);
    }
    let split: Vec<usize> = (0..3)
        .map(|l| nbrs.iter().filter(|v| label(v) == l).count())
        .collect();
    let tau_fix = act(&set.tau, &base, cfg)? == base;

    let r = ctx.radius;
    let b = ball(r, cfg)?;
    let mut movers: Vec<QuadMat> = vec![set.rho.clone(), set.tau.clone()];
    for i in 0..7 {
        movers.push(set.g[i].clone());
        movers.push(set.inverse(i));
    }
    let mut cocycle_failures = 0;
    for g in &movers {
        let c = label_cocycle(g)?;
        for v in &b {
            if label(&act(g, v, cfg)?) != (label(v) + c) % 3 {
                cocycle_failures += 1;
            }
        }
    }

    let f = triangle_presentation(set)?;
    let ch = chamber_report(set, &f, cfg)?;

    let m = ctx.model();
    let letters = Letters {
        rho: set.rho.clone(),
        tau: set.tau.clone(),
        rho_bar: m.rho_bar.clone(),
        tau_bar: m.tau_bar.clone(),
    };
    let words_ok = generator_words_match(&letters, set)?;
    let js = ctx.j_groups();
    let j1 = &js[0].1;
    let tr = transitivity_certificate(
        &letters,
        r,
        Some(Filter {
            group: j1,
            ambient_order: m.image.order(),
        }),
        cfg,
    )?;
    let j4 = &js[3].1;
    let tr4 = transitivity_certificate(
        &letters,
        1,
        Some(Filter {
            group: j4,
            ambient_order: m.image.order(),
        }),
        cfg,
    )?;
    let budget = 2 * r as usize + 4;
    let ls = letter_search(&letters, r, budget, cfg)?;
    let filter = tr.filter.clone().expect("filter given");
    let filter4 = tr4.filter.clone().expect("filter given");

    Ok(vec![
        Claim::new(
            "building.neighbors",
            "The base vertex has 14 neighbours, namely g_i^(+-1) of it, split 7/7 between the two non-zero labels",
            Status::of(nbrs.len() == 14 && nbrs == images && split == vec![0, 7, 7]),
            json!({"count": nbrs.len(), "equals_generator_images": nbrs == images, "label_split": split,
                   "vertices": nbrs.iter().map(|v| v.to_string()).collect::<Vec<_>>()}),
        ),
        Claim::new(
            "building.tau_fixes_base",
            "tau fixes the base vertex",
            Status::of(tau_fix),
            json!({"rho_base": act(&set.rho, &base, cfg)?.to_string()}),
        ),
        Claim::new(
            "building.label_cocycle",
            "label(g v) = label(v) + nu(det g) mod 3 on the ball, for rho, tau and all g_i^(+-1)",
            Status::of(cocycle_failures == 0 && label_cocycle(&set.rho)? == 1),
            json!({"radius": r, "ball_size": b.len(), "checked": b.len() * movers.len(),
                   "failures": cocycle_failures, "rho_cocycle": label_cocycle(&set.rho)?}),
        ),
        Claim::new(
            "building.chambers",
            "The 21 triples give the 21 chambers at the base vertex, labels are bijective on each, and the rotation and tau rules hold",
            Status::of(ch.passed()),
            json!({"geometric_chambers": ch.geometric_count, "bijective": ch.bijective,
                   "labels_bijective": ch.labels_bijective, "rotation_rule": ch.rotation_rule,
                   "tau_rule": ch.tau_rule}),
        ),
        Claim::new(
            "building.transitivity",
            "Words in rho, tau reach every vertex of the ball, and J1 picks exactly one of w, w tau, w tau^2 per vertex",
            Status::of(words_ok && tr.passed()),
            json!({"radius": r, "ball_size": tr.ball_size, "reached": tr.reached,
                   "max_word_length": tr.max_word, "generator_words_match": words_ok,
                   "filter": {"index_three": filter.index_three,
                              "tau_powers_excluded": filter.tau_powers_excluded,
                              "unique_vertices": filter.unique_vertices,
                              "failing_vertices": filter.failing_vertices}}),
        ),
        Claim::new(
            "building.transitivity_j4",
            "The coset filter fails for J4, which contains the image of tau",
            Status::of(!filter4.passed() && !filter4.tau_powers_excluded),
            json!({"tau_powers_excluded": filter4.tau_powers_excluded,
                   "failing_vertices": filter4.failing_vertices}),
        ),
        Claim::new(
            "building.letter_budget",
            "Coverage of the ball by all words of length at most 2r+4 in rho^(+-1), tau^(+-1)",
            Status::ReportOnly,
            json!({"budget": ls.budget, "ball_size": ls.ball_size, "reached": ls.reached}),
        ),
    ])
}

fn unitary(ctx: &Context) -> Result<Vec<Claim>> {
    let s = ctx.special();
    let en = ctx.u1()?;
    let m = ctx.model();
    let u0 = enumerate_u0();
    let structure = structure_check(s, en);
    let rels = relation_suite(s, &[m.rho_bar.clone(), m.tau_bar.clone()]);
    let corrected = corrected_relations(s);
    let orders_ok = s
        .named()
        .iter()
        .all(|(n, g)| crate::finite_unitary::element_order(g) == if *n == "w" { 4 } else { 3 });
    let words_fixed = corrected_b1_word(s, &m.rho_bar, &m.tau_bar);
    Ok(vec![
        Claim::new(
            "unitary.orders",
            "|U'0| = 432, |U'1| = 944784, |U'1+| = 472392, |image| = 34992",
            Status::of(
                u0.order() == U0_ORDER
                    && en.u1.order() == U1_ORDER
                    && en.u1_plus.order() == U1_PLUS_ORDER
                    && m.image.order() == MODEL_ORDER
                    && en.routes_agree
                    && en.rejected_candidates == 0
                    && level0_image(&en.u1).same_elements(&u0),
            ),
            json!({"u0": u0.order(), "u1": en.u1.order(), "u1_plus": en.u1_plus.order(),
                   "image": m.image.order(), "routes_agree": en.routes_agree,
                   "rejected_candidates": en.rejected_candidates,
                   "det_kernel_is_plus": en.det_kernel_is_plus,
                   "u1_fingerprint": format!("{:016x}", en.u1.fingerprint())}),
        ),
        Claim::new(
            "unitary.degenerate_form",
            "Order of the full similitude group of the degenerate level-0 form",
            Status::ReportOnly,
            json!({"order": degenerate_form_group_order()}),
        ),
        Claim::new(
            "unitary.structure",
            "T, H, M, S have orders 9, 27, 81, 24 and the stated intersections and normal forms",
            Status::of(structure.iter().all(|c| c.holds)),
            json!(structure.iter().map(|c| json!({"name": c.name, "holds": c.holds, "detail": c.detail})).collect::<Vec<_>>()),
        ),
        Claim::new(
            "unitary.element_orders",
            "w has order 4 and every other special element has order 3",
            Status::of(orders_ok),
            json!(s.named().iter().map(|(n, g)| json!({"name": n, "order": crate::finite_unitary::element_order(g)})).collect::<Vec<_>>()),
        ),
        Claim::new(
            "unitary.relations",
            "Every listed relation among the special elements holds as stated",
            Status::of(rels.iter().all(|r| r.holds)),
            json!({"failing": failing(&rels), "relations": relations_value(&rels)}),
        ),
        Claim::new(
            "unitary.relations_corrected",
            "The relation for c2^u with a z^-1 factor, and modulo <z>",
            Status::ReportOnly,
            relations_value(&corrected),
        ),
        Claim::new(
            "unitary.model_image",
            "The image of rho, tau and scalars equals the group generated by T, H, S, d1 d2 and scalars, and its level-0 image is U'0",
            Status::of(m.descriptions_agree() && m.level0_is_u0),
            json!({"order": m.image.order(), "level0_order": m.level0.order(),
                   "rho_bar": mat_r1(&m.rho_bar), "tau_bar": mat_r1(&m.tau_bar)}),
        ),
        Claim::new(
            "unitary.words",
            "The words in rho-bar, tau-bar for z, w, b1, c1, u hold as stated",
            Status::of(m.words.iter().all(|r| r.holds)),
            json!({"failing": failing(&m.words), "words": relations_value(&m.words)}),
        ),
        Claim::new(
            "unitary.words_corrected",
            "The b1 word with the commutator arguments swapped",
            Status::ReportOnly,
            relations_value(&words_fixed),
        ),
    ])
}

fn classify(ctx: &Context) -> Result<Vec<Claim>> {
    let s = ctx.special();
    let m = ctx.model();
    let amb = ctx.ambient();
    let c = ctx.classification();
    let js = ctx.j_groups();
    let mut matches = Vec::new();
    for (name, j) in js {
        let idx = amb.indices_of(j);
        let class = c.classes.iter().position(|cl| cl.contains(&idx));
        matches.push((name.clone(), j.order(), class));
    }
    let distinct: BTreeSet<usize> = matches.iter().filter_map(|m| m.2).collect();
    let rho_in_j3 = js[2].1.contains(&m.rho_bar);
    let tau_in_j4 = js[3].1.contains(&m.tau_bar);
    let q = quaternion_check(s);
    let irreducible = h_image_irreducible(s);
    Ok(vec![
        Claim::new(
            "classify.index3",
            "There are exactly 4 conjugacy classes of index-3 subgroups, represented by J1, J2, J3, J4",
            Status::of(
                c.classes.len() == 4
                    && distinct.len() == 4
                    && matches.iter().all(|m| m.1 * 3 == MODEL_ORDER)
                    && rho_in_j3
                    && tau_in_j4,
            ),
            json!({"overgroups_examined": c.overgroups_examined,
                   "index3_subgroups": c.index3.len(), "classes": c.classes.len(),
                   "class_sizes": c.classes.iter().map(Vec::len).collect::<Vec<_>>(),
                   "j_groups": matches.iter().map(|(n, o, k)| json!({"name": n, "order": o, "class": k})).collect::<Vec<_>>(),
                   "rho_bar_in_j3": rho_in_j3, "tau_bar_in_j4": tau_in_j4}),
        ),
        Claim::new(
            "classify.quaternion",
            "P is quaternion of order 8, the unique 2-Sylow of S, and <P, -I> has order 16",
            Status::of(q.passed()),
            json!({"order": q.order, "involutions": q.involutions, "order_four": q.order_four,
                   "two_elements_in_s": q.two_elements_in_s, "with_sign": q.sylow_with_sign_order}),
        ),
        Claim::new(
            "classify.h_irreducible",
            "The image of H is an irreducible module for P",
            Status::of(irreducible),
            json!(irreducible),
        ),
    ])
}

fn torsion(ctx: &Context) -> Result<Vec<Claim>> {
    let s = ctx.special();
    let m = ctx.model();
    let amb = ctx.ambient();
    let mut out = Vec::new();
    for (i, (name, j)) in ctx.j_groups().iter().enumerate() {
        let t = torsion_certificate(amb, j, &m.rho_bar, &m.tau_bar);
        let expect_free = i < 2;
        out.push(Claim::new(
            &format!("torsion.{}", name.to_lowercase()),
            if expect_free {
                "No scalar multiple of a conjugate of rho-bar^(+-1), tau-bar^(+-1) lies in the subgroup"
            } else {
                "Some scalar multiple of a conjugate of rho-bar^(+-1), tau-bar^(+-1) lies in the subgroup"
            },
            Status::of(t.passed() == expect_free),
            json!({"hits": t.hits, "first_hit": t.first_hit.as_ref().map(mat_r1)}),
        ));
    }
    for (name, j) in ctx.j_groups().iter().take(2) {
        let d = det_image_check(j, s);
        out.push(Claim::new(
            &format!("det_image.{}", name.to_lowercase()),
            "-1 and the determinants of factor-1 elements generate all six units, with det u = 1 - t among them",
            Status::of(d.passed()),
            json!({"values": d.values.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                   "generated": d.generated.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                   "det_u": d.det_u.to_string()}),
        ));
    }
    Ok(out)
}

fn appendix(ctx: &Context) -> Result<Vec<Claim>> {
    let e = eigen_bound_certificate()?;
    let st = stabilizer_search(ctx.cfg)?;
    let en = &st.enumeration;
    let seeds_present = SEEDS.iter().all(|s| en.v.contains(s));
    let fnorm = factor_normalization(ctx.cfg)?;
    let dom = entry_domain(&st.found)?;
    let cases: Vec<Value> = st
        .outcomes
        .cases
        .iter()
        .map(|c| {
            json!({"v2": c.v2.to_string(),
                   "v1": c.v1.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                   "v3": c.v3.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                   "paired": c.paired.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
                   "invertible": c.invertible.iter().map(mat_q).collect::<Vec<_>>()})
        })
        .collect();
    Ok(vec![
        Claim::new(
            "appendix.eigen_bound",
            "f(48/25) < 0 < f(2) and f is increasing on [0, 48/25], so every eigenvalue of Q exceeds 1.92",
            Status::of(e.passed()),
            json!({"f_48_25": e.f_at_bound.to_string(), "f_2": e.f_at_two.to_string(),
                   "f_0": e.f_at_zero.to_string(), "increasing": e.increasing,
                   "no_nonpositive_root": e.no_nonpositive_root}),
        ),
        Claim::new(
            "appendix.f_prime",
            "F'(2,1,1,0,0,0) = 1 and F'(2,1,0,0,0,0) = 3, and no coordinate of size 2 occurs on F = 10",
            Status::of(
                f_prime([2, 1, 1, 0, 0, 0]) == 1
                    && f_prime([2, 1, 0, 0, 0, 0]) == 3
                    && en.large_hits == 0,
            ),
            json!({"f_prime_211": f_prime([2, 1, 1, 0, 0, 0]), "f_prime_21": f_prime([2, 1, 0, 0, 0, 0]),
                   "large_hits": en.large_hits}),
        ),
        Claim::new(
            "appendix.v",
            "|V| = 24, agreeing across the pruned box, the coarse box and the seed orbits",
            Status::of(en.v.len() == 24 && en.routes_agree() && seeds_present),
            json!({"size": en.v.len(), "pruned_candidates": en.pruned_candidates,
                   "routes_agree": en.routes_agree(), "seeds_present": seeds_present,
                   "vectors": en.v.iter().map(|v| v.to_string()).collect::<Vec<_>>()}),
        ),
        Claim::new(
            "appendix.stabilizer",
            "The column search returns exactly the 6 matrices +-tau^i, each fixing the base vertex with factor 1",
            Status::of(st.passed()),
            json!({"paired_triples": st.paired_triples, "found": st.found.len(),
                   "equals_g2": st.equals_g2, "fixes_base": st.fixes_base,
                   "matrices": st.found.iter().map(mat_q).collect::<Vec<_>>()}),
        ),
        Claim::new(
            "appendix.cases",
            "The four second-column cases: no v1; two non-invertible cases; only the identity",
            Status::of(st.outcomes.match_expected()),
            json!({"columns_cover_v": st.outcomes.columns_cover_v, "cases": cases}),
        ),
        Claim::new(
            "appendix.factor_normalization",
            "Every matrix preserving Z2^3 has factor 4^k and becomes factor 1 after dividing by lambda-bar^k",
            Status::of(fnorm.passed()),
            json!({"admissible": fnorm.admissible.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                   "all_reduce_to_one": fnorm.all_reduce_to_one,
                   "witness": "lambda-bar * tau", "witness_factor": fnorm.witness_factor.to_string(),
                   "witness_fixes_base": fnorm.witness_fixes_base}),
        ),
        Claim::new(
            "appendix.entry_domain",
            "30 Q^-1 has entries in Z[lambda-bar, 1/lambda-bar], and the stabilizer entries lie in Z + (lambda/2)Z",
            Status::ReportOnly,
            json!({"thirty_q_inv": mat_q(&dom.thirty_q_inv), "in_z_lambda_bar": dom.in_z_lambda_bar,
                   "stabilizer_in_half_lattice": dom.stabilizer_in_half_lattice}),
        ),
    ])
}

fn algebra() -> Result<Vec<Claim>> {
    let sg = sigma_check();
    let em = embed_check(SAMPLE_PAIRS);
    let sc = star_check(SAMPLE_PAIRS);
    let b = b_checks(SAMPLE_PAIRS);
    let o = order_and_pairing_checks();
    let d = det_square_check();
    let g_pi = gstar_membership(&DElemQ::pi());
    let g_b = gstar_membership(&crate::division_algebra::b_element());
    Ok(vec![
        Claim::new(
            "algebra.sigma",
            "sigma(eta) = eta^2 - 2 has order 3, fixes K and preserves eta^3 - 3 eta + 1",
            Status::of(sg.passed()),
            json!({"sigma_eta": format!("{:?}", sg.sigma_eta.c.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
                   "order_three": sg.order_three, "fixes_k": sg.fixes_k, "minpoly": sg.minpoly_preserved}),
        ),
        Claim::new(
            "algebra.embedding",
            "Pi^3 = mu, multiplication is associative, and the matrix embedding is multiplicative with Nrd in K",
            Status::of(em.passed()),
            json!({"pairs": em.pairs, "multiplicative_failures": em.multiplicative_failures,
                   "associativity_failures": em.associativity_failures,
                   "nrd_outside_k": em.nrd_outside_k, "pi_cubed_is_mu": em.pi_cubed_is_mu}),
        ),
        Claim::new(
            "algebra.star",
            "* is an involutive anti-automorphism, Pi* Pi = 1, and tr(x x*) is positive definite",
            Status::of(sc.passed()),
            json!({"pairs": sc.pairs, "involutive_failures": sc.involutive_failures,
                   "anti_multiplicative_failures": sc.anti_multiplicative_failures,
                   "gram_minors_positive": sc.positive_definite(),
                   "gram_det": sc.gram_minors.last().map(|x| x.to_string())}),
        ),
        Claim::new(
            "algebra.b",
            "b* = -b, Nrd(b) = -7(lambda-bar - lambda) with p- and p-bar-valuation 0, and the b-twisted involution squares to the identity",
            Status::of(b.passed()),
            json!({"nrd_b": b.nrd_b.to_string(), "expected": b.expected.to_string(),
                   "val_p": b.val_p, "val_pbar": b.val_pbar, "star2_failures": b.star2_failures,
                   "trace_q": b.trace_q.to_string(), "three_tr_trd": b.trace_via_trd.to_string()}),
        ),
        Claim::new(
            "algebra.order",
            "O_L = Z[lambda, eta] and O_D are closed under multiplication",
            Status::of(o.ol_closed && o.non_integral.is_none()),
            json!({"ol_closed": o.ol_closed, "non_integral": o.non_integral}),
        ),
        Claim::new(
            "algebra.psi_perfect",
            "The Gram determinant of psi on the Z-basis of O_D is a 2-adic unit",
            Status::of(o.passed()),
            json!({"det": o.psi_gram_det.to_string(), "nu2": nu2(&o.psi_gram_det),
                   "alternating": o.psi_alternating}),
        ),
        Claim::new(
            "algebra.det_3q",
            "det(3Q) = 8100 = 90^2",
            Status::of(d.passed()),
            json!({"det_3q": d.det_3q.to_string(), "square": d.det_3q_square}),
        ),
        Claim::new(
            "algebra.b_normalizations",
            "Determinants of -7b and of its two Hermitian normalizations, with square and norm classes",
            Status::ReportOnly,
            json!(d.b_side.iter().map(|n| json!({"matrix": n.label, "det": n.det.to_string(),
                "rational": n.rational.as_ref().map(|r| r.to_string()),
                "square": n.is_square, "norm_from_k": n.is_norm})).collect::<Vec<_>>()),
        ),
        Claim::new(
            "algebra.gstar",
            "gamma-star gamma for gamma = 1, 3, Pi, b",
            Status::ReportOnly,
            json!({"one": gstar_membership(&DElemQ::from_i64(1)).map(|r| r.to_string()),
                   "three": gstar_membership(&DElemQ::from_i64(3)).map(|r| r.to_string()),
                   "pi": g_pi.map(|r| r.to_string()), "b": g_b.map(|r| r.to_string())}),
        ),
    ])
}
