use super::gcd::{content_in, gcd};
use super::zpoly::ZPoly;

/// Product of the distinct irreducible factors of `p`, primitive with a
/// positive leading coefficient. Constants map to 1.
pub fn squarefree_part(p: &ZPoly) -> ZPoly {
    assert!(!p.is_zero(), "square-free part of zero");
    if p.is_constant() {
        return ZPoly::one();
    }
    let p = p.primitive();
    let w = p.vars().iter().next().unwrap();
    let c = content_in(&p, w);
    let pp = p.div_exact(&c).unwrap();
    // pp is primitive in w, so every factor involves w and the derivative
    // test sees all of them.
    let g = gcd(&pp, &pp.derivative(w));
    let sq = pp.div_exact(&g).unwrap().primitive();
    let rest = squarefree_part(&c);
    rest.mul(&sq).primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::zpoly::Var;
    use num_bigint::BigInt;

    #[test]
    fn visible_squares() {
        let d = ZPoly::var(Var::Z);
        let t1 = ZPoly::var(Var::T).sub(&ZPoly::one());
        let p = d.pow(2).mul(&t1.pow(2)).scale(&BigInt::from(-12));
        assert_eq!(squarefree_part(&p), d.mul(&t1).primitive());
    }

    #[test]
    fn constant_stripped() {
        let p = ZPoly::var(Var::X).add(&ZPoly::var(Var::Z)).scale(&BigInt::from(-4));
        assert_eq!(squarefree_part(&p), ZPoly::var(Var::X).add(&ZPoly::var(Var::Z)));
    }
}
