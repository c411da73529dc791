use serde_json::json;

use crate::cft::{norm_model, NormModel};
use crate::int::Int;
use crate::lattice::{AbMap, FgAb, IntMatrix};

use super::{subgroups_cdc, Cdc, Check, Lab, LabError, Span};

fn order_json(s: &Span) -> serde_json::Value {
    json!(s.order())
}

/// `F = ker(Z^{aux} → Cl → Cl)`, `a ↦ N·Σ a_q φ̄_q`, as a basis of `Z^{aux}`.
pub(super) fn f_basis(lab: &Lab) -> IntMatrix {
    let inst = &lab.inst;
    let k = inst.aux.len();
    let phi = IntMatrix::from_cols(inst.cl.ngens(), &inst.aux.iter().map(|q| q.frobenius.clone()).collect::<Vec<_>>());
    let m = AbMap::new_unchecked(FgAb::free(k), inst.cl.ab().clone(), inst.cl.norm_matrix().mul(&phi));
    m.kernel().1.matrix
}

/// The assertions (a)–(e) relating `F`, `H^{-1}(G, Cl)`, `C̄`, `C`, `D` and `Nm : Cl → Q`.
pub fn norm_suite(lab: &Lab) -> Result<Vec<Check>, LabError> {
    let inst = &lab.inst;
    let res = &lab.res;
    let cdc: Cdc = subgroups_cdc(inst, res)?;
    let nm: NormModel = norm_model(inst);
    let h = cdc.h_minus1.group().clone();
    let cl = inst.cl.ab();
    let mut out = Vec::new();

    // (e, first half) D ⊆ Ker Nm ⊆ ker N.
    let (_, ker_nm_incl) = nm.nm.ab.kernel();
    let ker_nm = Span::new(cl, ker_nm_incl.matrix.clone());
    let ker_n = Span::new(cl, AbMap::new_unchecked(cl.clone(), cl.clone(), inst.cl.norm_matrix()).kernel().1.matrix);
    let inclusions = ker_nm.contains_span(&cdc.d) && ker_n.contains_span(&ker_nm) && ker_nm.contains_span(&cdc.c);
    out.push(Check::new(
        "norm.inclusions",
        inclusions,
        json!({"d": order_json(&cdc.d), "c": order_json(&cdc.c), "ker_nm": order_json(&ker_nm), "ker_n": order_json(&ker_n)}),
    ));

    // (a) F ↠ H^{-1}.
    let fb = f_basis(lab);
    let f_to_h_cols = fb
        .columns()
        .iter()
        .map(|a| {
            let mut c = vec![Int::ZERO; cl.ngens()];
            for (aq, q) in a.iter().zip(&inst.aux) {
                for (x, y) in c.iter_mut().zip(&q.frobenius) {
                    *x += aq * y;
                }
            }
            cdc.class(res, inst, &c)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let f = FgAb::free(fb.cols());
    let f_to_h = AbMap::new_unchecked(f.clone(), h.clone(), IntMatrix::from_cols(h.ngens(), &f_to_h_cols));
    out.push(Check::new(
        "norm.a_f_surjects",
        f_to_h.is_surjective(),
        json!({"f_rank": fb.cols(), "h_minus1": h.describe()}),
    ));

    // (b) Ker(N̄m) = C̄.
    let nm_bar_cols: Vec<Vec<Int>> = (0..h.ngens())
        .map(|j| nm.q.reduce_canon(&nm.nm.apply(&cdc.h_minus1.rep_of(&h.gen(j)))))
        .collect();
    let nm_bar = AbMap::new(h.clone(), nm.q.clone(), IntMatrix::from_cols(nm.q.ngens(), &nm_bar_cols));
    let (b_pass, b_witness) = match &nm_bar {
        Ok(m) => {
            let ker = Span::new(&h, m.kernel().1.matrix);
            (ker.same_as(&cdc.cbar), json!({"ker_nm_bar": order_json(&ker), "cbar": order_json(&cdc.cbar)}))
        }
        Err(e) => (false, json!({"error": e.to_string()})),
    };
    out.push(Check::new("norm.b_ker_nm_bar_is_cbar", b_pass, b_witness));

    // (c) Ker Nm = D + C, Nm surjective.
    let dc = cdc.d.sum(&cdc.c);
    out.push(Check::new(
        "norm.c_ker_nm_is_d_plus_c",
        ker_nm.same_as(&dc),
        json!({"ker_nm": order_json(&ker_nm), "d_plus_c": order_json(&dc)}),
    ));
    out.push(Check::new(
        "norm.c_nm_surjective",
        nm.nm.ab.is_surjective(),
        json!({"q": nm.q.describe(), "cl": cl.describe()}),
    ));

    // (d) ker(F → H^{-1}/C̄) = ker(F → Q).
    let (hq, hq_proj) = h.quotient(&cdc.cbar.gens);
    let f_to_hq = f_to_h.then(&AbMap::new_unchecked(h.clone(), hq.clone(), hq_proj.matrix.clone()));
    let f_to_q_cols: Vec<Vec<Int>> = fb
        .columns()
        .iter()
        .map(|a| {
            let mut v = vec![Int::ZERO; nm.q.ngens()];
            for (aq, cq) in a.iter().zip(&nm.class_in_q) {
                for (x, y) in v.iter_mut().zip(cq) {
                    *x += aq * y;
                }
            }
            v
        })
        .collect();
    let f_to_q = AbMap::new_unchecked(f.clone(), nm.q.clone(), IntMatrix::from_cols(nm.q.ngens(), &f_to_q_cols));
    let k1 = Span::new(&f, f_to_hq.kernel().1.matrix);
    let k2 = Span::new(&f, f_to_q.kernel().1.matrix);
    out.push(Check::new(
        "norm.d_same_kernels",
        k1.same_as(&k2),
        json!({"f_rank": fb.cols(), "index_via_h": hq.describe(), "index_via_q": f_to_q.image().0.describe()}),
    ));

    // (e) 0 → D → Ker Nm → C̄ → 0.
    let e_pass = if inclusions {
        let classes = ker_nm.gens.columns().iter().map(|c| cdc.class(res, inst, c)).collect::<Result<Vec<_>, _>>()?;
        let image = Span::from_vecs(&h, &classes);
        let d_dies = cdc
            .d
            .gens
            .columns()
            .iter()
            .map(|c| cdc.class(res, inst, c).map(|x| x.iter().all(Int::is_zero)))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .all(|b| b);
        let orders = match (ker_nm.order(), cdc.d.order(), image.order()) {
            (Some(k), Some(d), Some(i)) => k == d * i,
            _ => false,
        };
        image.same_as(&cdc.cbar) && d_dies && orders
    } else {
        false
    };
    out.push(Check::new(
        "norm.e_exact_sequence",
        e_pass,
        json!({"d": order_json(&cdc.d), "ker_nm": order_json(&ker_nm), "cbar": order_json(&cdc.cbar)}),
    ));
    out.push(Check::new(
        "cdc.d_stable",
        cdc.d_is_stable(inst),
        json!({"d": order_json(&cdc.d)}),
    ));
    Ok(out)
}
