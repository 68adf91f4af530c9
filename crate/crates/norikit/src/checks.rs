//! Named check suites over a representation: `end` (algebra laws),
//! `duality` (coalgebra/comodule laws), `equivalence` (functor and
//! equivalence data), and `all`. Each suite returns one pass/fail item
//! per invariant; every identity is tested exactly.

use std::sync::Arc;

use crate::coalgebra::{dualize, module_to_comodule, comodule_to_module};
use crate::diagram::Representation;
use crate::emodule::EModule;
use crate::end_algebra::{compute_end, transition_hom};
use crate::error::{Error, Result};
use crate::exact_linalg::{ExactMatrix, Scalar};
use crate::functors::{canonical_map, verify_equivalence, CheckReport};

pub const SUITES: [&str; 4] = ["end", "duality", "equivalence", "all"];

pub fn run_suite(rep: &Representation, suite: &str, bound: usize) -> Result<CheckReport> {
    match suite {
        "end" => suite_end(rep),
        "duality" => suite_duality(rep),
        "equivalence" => suite_equivalence(rep, bound),
        "all" => {
            let mut report = suite_end(rep)?;
            report.items.extend(suite_duality(rep)?.items);
            report.items.extend(suite_equivalence(rep, bound)?.items);
            Ok(report)
        }
        other => Err(Error::Parse(format!("unknown suite `{other}`"))),
    }
}

/// End-algebra laws: every basis tuple satisfies every edge equation,
/// products close onto the structure constants, the structure constants
/// are associative, and the unit laws hold.
pub fn suite_end(rep: &Representation) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let e = compute_end(rep)?;
    let ring = e.ring();
    let dim = e.dim();
    report.push("end/dimension", true, format!("dim End(T) = {dim}"));

    let mut intertwine = true;
    for i in 0..dim {
        for edge in rep.diagram.edges() {
            let t = &rep.edge_matrix[&edge.id];
            let ep = e.basis_component(i, &edge.src);
            let eq = e.basis_component(i, &edge.dst);
            if &(t * ep) != &(eq * t) {
                intertwine = false;
            }
        }
    }
    report.push("end/intertwiner_equations", intertwine, "Tm . e_p = e_q . Tm for every edge");

    let mut closed = true;
    for i in 0..dim {
        for j in 0..dim {
            let product: Vec<ExactMatrix> = e
                .basis_tuple(i)
                .iter()
                .zip(e.basis_tuple(j))
                .map(|(a, b)| a * b)
                .collect();
            let combo = e.tuple_from_coords(e.structure_coords(i, j));
            if product != combo {
                closed = false;
            }
        }
    }
    report.push("end/multiplication_closure", closed, "basis products match structure constants");

    let mut assoc = true;
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                for m in 0..dim {
                    let lhs = (0..dim).fold(Scalar::zero(ring), |acc, l| {
                        &acc + &(e.structure_constant(i, j, l) * e.structure_constant(l, k, m))
                    });
                    let rhs = (0..dim).fold(Scalar::zero(ring), |acc, l| {
                        &acc + &(e.structure_constant(j, k, l) * e.structure_constant(i, l, m))
                    });
                    if lhs != rhs {
                        assoc = false;
                    }
                }
            }
        }
    }
    report.push("end/associativity", assoc, "structure constants associate");

    let mut unit = true;
    for i in 0..dim {
        let mut x = vec![Scalar::zero(ring); dim];
        x[i] = Scalar::one(ring);
        if e.multiply(e.unit_coords(), &x)? != x || e.multiply(&x, e.unit_coords())? != x {
            unit = false;
        }
    }
    report.push("end/unit_laws", unit, "unit is a two-sided identity");
    Ok(report)
}

fn sample_modules(e: &Arc<crate::end_algebra::EndAlgebra>) -> Result<Vec<EModule>> {
    let mut out = Vec::new();
    for v in e.vertex_order().to_vec() {
        out.push(e.tautological_module(&v)?);
    }
    out.push(e.regular_module()?);
    Ok(out)
}

/// Duality laws: the dual coalgebra satisfies coassociativity and the
/// counit identities, the module/comodule translation is a bit-exact
/// roundtrip, morphism checks agree on both sides, and transition
/// homomorphisms dualize to coalgebra morphisms.
pub fn suite_duality(rep: &Representation) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let e = Arc::new(compute_end(rep)?);
    let c = dualize(&e);
    report.push(
        "duality/coalgebra_laws",
        c.validate().is_ok(),
        format!("rank {} dual passes coassociativity and counit", c.rank()),
    );

    let modules = sample_modules(&e)?;
    let mut roundtrip = true;
    for m in &modules {
        let cm = module_to_comodule(m)?;
        cm.validate()?;
        let back = comodule_to_module(&cm, &e)?;
        if back.actions() != m.actions() {
            roundtrip = false;
        }
    }
    report.push(
        "duality/module_comodule_roundtrip",
        roundtrip,
        "coaction coefficients reproduce the action matrices exactly",
    );

    // morphism translation: the module-side and comodule-side checks
    // must accept and reject the same candidate matrices
    let mut agree = true;
    for m in &modules {
        let cm = module_to_comodule(m)?;
        let d = m.rank();
        let mut candidates: Vec<ExactMatrix> = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let mut unit = ExactMatrix::zeros(e.ring(), d, d);
                unit.set(i, j, Scalar::one(e.ring()));
                candidates.push(unit);
            }
        }
        candidates.extend(m.actions().iter().cloned());
        for f in &candidates {
            let module_ok = m.is_morphism(m, f).is_ok();
            let comodule_ok = cm.is_morphism(&cm, f).is_ok();
            if module_ok != comodule_ok {
                agree = false;
            }
        }
    }
    report.push(
        "duality/morphism_translation",
        agree,
        "module and comodule morphism conditions agree on all candidates",
    );

    let mut duals_ok = true;
    for v in e.vertex_order().to_vec() {
        let small_rep = rep.restrict_to(&[v.clone()])?;
        let small = compute_end(&small_rep)?;
        let h = transition_hom(&e, &small)?;
        if crate::coalgebra::dual_of_algebra_hom(&h, &e, &small).is_err() {
            duals_ok = false;
        }
    }
    report.push(
        "duality/dual_transition_maps",
        duals_ok,
        "dualized transition homomorphisms are coalgebra morphisms",
    );
    Ok(report)
}

/// Equivalence data: per-vertex `T(X(p)) = E(p)` and `can` verdicts plus
/// the full direct-sum report over all vertices.
pub fn suite_equivalence(rep: &Representation, bound: usize) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for v in rep.diagram.vertices().to_vec() {
        let can = canonical_map(rep, &v)?;
        report.push(
            &format!("equivalence/can_iso[{v}]"),
            can.is_iso,
            "canonical map is an isomorphism",
        );
    }
    let vs: Vec<String> = rep.diagram.vertices().to_vec();
    let full = verify_equivalence(rep, &vs, bound)?;
    for item in full.items {
        report.push(&format!("equivalence/{}", item.name), item.pass, item.detail);
    }
    Ok(report)
}
