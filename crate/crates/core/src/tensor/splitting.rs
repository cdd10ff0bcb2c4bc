//! Retractions `G ⊗^q G → ∇^q(G)` and the conjugation action on the tensor
//! square.

use super::{binomial2, QTensorSquare};
use crate::error::{Error, Result};
use crate::group::{Elem, Homomorphism};

/// Extends images of the presentation generators (in generator order) to an
/// endomorphism of the realized tensor square, after checking every
/// defining relator.
fn endomorphism(qt: &QTensorSquare, images: &[Elem], what: &str) -> Result<Homomorphism> {
    let t = qt.realized();
    if let Some(i) = qt.presentation().first_violated(t, images) {
        return Err(Error::InternalInconsistency(format!(
            "{what} violates relator {i}"
        )));
    }
    Homomorphism::from_generator_images(t, t, &qt.symbols(), images)
}

/// Checks that `f` maps into `∇^q` and fixes it pointwise.
fn check_retraction(qt: &QTensorSquare, f: &Homomorphism, what: &str) -> Result<()> {
    let nabla = qt.nabla();
    if !f.images().iter().all(|&x| nabla.contains(x)) {
        return Err(Error::InternalInconsistency(format!(
            "{what} does not map into nabla"
        )));
    }
    if !nabla.elements().iter().all(|&x| f.apply(x) == x) {
        return Err(Error::InternalInconsistency(format!(
            "{what} does not fix nabla"
        )));
    }
    Ok(())
}

fn symbol_images(
    qt: &QTensorSquare,
    tensor: impl Fn(Elem, Elem) -> Elem,
    hat: impl Fn(Elem) -> Elem,
) -> Vec<Elem> {
    let g = qt.base();
    let mut images: Vec<Elem> = Vec::with_capacity(g.order() * (g.order() + 1));
    for a in g.elements() {
        for b in g.elements() {
            images.push(tensor(a, b));
        }
    }
    if qt.q() >= 1 {
        images.extend(g.elements().map(hat));
    }
    images
}

/// The retraction `α′` for an odd `k = 2n + 1` with `(g ⊗ g)^k = 1` for all
/// `g`: `g ⊗ h ↦ ((g ⊗ h)(h ⊗ g))^{-n}`, `{(g,g)} ↦ (g ⊗ g)^{n·C(q,2)}`.
pub fn splitting_alpha(qt: &QTensorSquare, k: u32) -> Result<Homomorphism> {
    if k.is_multiple_of(2) {
        return Err(Error::HypothesisNotMet(format!("k = {k} is not odd")));
    }
    let t = qt.realized();
    let g = qt.base();
    if let Some(a) = g
        .elements()
        .find(|&a| t.pow(qt.tensor(a, a), k as i64) != 0)
    {
        return Err(Error::HypothesisNotMet(format!(
            "(g (x) g)^{k} != 1 for g = {a}"
        )));
    }
    let n = (k / 2) as i64;
    let c = binomial2(qt.q());
    let images = symbol_images(
        qt,
        |a, b| t.pow(t.mul(qt.tensor(a, b), qt.tensor(b, a)), -n),
        |a| t.pow(qt.tensor(a, a), n * c),
    );
    let f = endomorphism(qt, &images, "alpha'")?;
    check_retraction(qt, &f, "alpha'")?;
    Ok(f)
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (s0, s1) = (s1, s0 - quot * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m))
}

/// The retraction `β′` for an even `n = 2k` such that `x ↦ x^n` is a
/// bijection of `∇^q`: `g ⊗ h ↦ ((g ⊗ h)(h ⊗ g))^{k/n}` and
/// `{(g,g)} ↦ (g ⊗ g)^{-(k/n)·C(q,2)}`, where `t^{k/n}` is the unique `n`-th
/// root of `t^k`, namely `t^{k·n⁻¹ mod m}` for `m = exp(∇^q)`.
pub fn splitting_beta(qt: &QTensorSquare, n: u32) -> Result<Homomorphism> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::HypothesisNotMet(format!(
            "n = {n} is not a positive even integer"
        )));
    }
    let t = qt.realized();
    let nabla = qt.nabla();
    let mut hit = vec![false; t.order()];
    for &x in nabla.elements() {
        if std::mem::replace(&mut hit[t.pow(x, n as i64)], true) {
            return Err(Error::HypothesisNotMet(format!(
                "x -> x^{n} is not injective on nabla"
            )));
        }
    }
    let m = nabla
        .elements()
        .iter()
        .fold(1usize, |acc, &x| crate::group::lcm(acc, t.element_order(x))) as i64;
    let k = (n / 2) as i64;
    let n_inv = mod_inverse(n as i64, m).ok_or_else(|| {
        Error::HypothesisNotMet(format!("{n} is not invertible modulo exp(nabla) = {m}"))
    })?;
    let root = (k * n_inv).rem_euclid(m);
    let hat_exp = (-k * binomial2(qt.q())).rem_euclid(m) * n_inv % m;
    let images = symbol_images(
        qt,
        |a, b| t.pow(t.mul(qt.tensor(a, b), qt.tensor(b, a)), root),
        |a| t.pow(qt.tensor(a, a), hat_exp),
    );
    let f = endomorphism(qt, &images, "beta'")?;
    check_retraction(qt, &f, "beta'")?;
    Ok(f)
}

/// The automorphism of `G ⊗^q G` induced by conjugating every symbol's
/// indices by `g`.
pub fn conjugation_action(qt: &QTensorSquare, g: Elem) -> Result<Homomorphism> {
    let base = qt.base();
    let images = symbol_images(
        qt,
        |a, b| qt.tensor(base.conj(g, a), base.conj(g, b)),
        |a| {
            qt.hat(base.conj(g, a))
                .expect("hat symbols exist for q >= 1")
        },
    );
    let f = endomorphism(qt, &images, "conjugation action")?;
    if !f.is_bijective() {
        return Err(Error::InternalInconsistency(
            "conjugation action is not bijective".into(),
        ));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;
    use crate::tensor::{realize_tensor, TensorOptions};

    fn tensor(name: &str, q: u32) -> QTensorSquare {
        realize_tensor(&builtin(name).unwrap(), q, &TensorOptions::default()).unwrap()
    }

    #[test]
    fn mod_inverses() {
        assert_eq!(mod_inverse(2, 3), Some(2));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(mod_inverse(4, 1), Some(0));
    }

    #[test]
    fn alpha_with_k_one_is_trivial() {
        let qt = tensor("S3", 1);
        let f = splitting_alpha(&qt, 1).unwrap();
        assert!(f.images().iter().all(|&x| x == 0));
    }

    #[test]
    fn alpha_s3_q3() {
        let qt = tensor("S3", 3);
        let f = splitting_alpha(&qt, 3).unwrap();
        assert!(f.is_homomorphism(qt.realized(), qt.realized()));
    }

    #[test]
    fn alpha_hypothesis() {
        // in C2 ⊗ C2 the diagonal symbol has order 2
        let qt = tensor("C2", 0);
        assert!(matches!(
            splitting_alpha(&qt, 3),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn beta_cases() {
        let qt = tensor("S3", 3);
        let f = splitting_beta(&qt, 2).unwrap();
        assert!(f.is_homomorphism(qt.realized(), qt.realized()));
        let even = tensor("C2", 2);
        assert!(matches!(
            splitting_beta(&even, 2),
            Err(Error::HypothesisNotMet(_))
        ));
        let trivial = tensor("C3", 1);
        assert!(trivial.nabla().is_trivial());
        let f = splitting_beta(&trivial, 4).unwrap();
        assert!(f.images().iter().all(|&x| x == 0));
    }

    #[test]
    fn conjugation_examples() {
        let qt = tensor("S3", 0);
        assert_eq!(
            conjugation_action(&qt, 0).unwrap(),
            Homomorphism::identity(qt.realized().order())
        );
        let s3 = qt.base();
        let transposition = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let f = conjugation_action(&qt, transposition).unwrap();
        assert_ne!(f, Homomorphism::identity(qt.realized().order()));
        assert!(qt.nabla().elements().iter().all(|&x| f.apply(x) == x));
        let ab = tensor("C2xC2", 1);
        assert_eq!(
            conjugation_action(&ab, 3).unwrap(),
            Homomorphism::identity(ab.realized().order())
        );
    }
}
