//! Named example ideals.

use crate::args::FixtureName;

/// A named monomial fixture: generators, number of variables and the degree
/// of the power of the maximal ideal added to make it Artinian.
pub struct MonomialFixture {
    pub generators: &'static str,
    pub nvars: usize,
    pub cap: Option<u32>,
}

pub fn monomial_fixture(name: FixtureName) -> Option<MonomialFixture> {
    use FixtureName::*;
    let (generators, nvars, cap) = match name {
        SlpChains => ("x1^2, x1*x2, x2^2, x2*x3^2", 3, Some(4)),
        NonSlpChains | BorelWlpJ => ("x1^2, x1*x2, x2^3, x1*x3^2, x2^2*x3^2, x2*x3^3, x3^5", 3, None),
        BorelWlpI => ("x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^3, x2*x3^3, x3^5", 3, None),
        StableI => ("x1^2, x1*x2, x2^2, x1*x3^2", 3, Some(4)),
        StableJ => ("x1^2, x1*x2, x2^2, x2*x3^2", 3, Some(4)),
        FourVarI => ("x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^2, x2*x3^2, x3^3, x2^2*x4", 4, Some(4)),
        FourVarJ => ("x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^2, x2*x3^2, x3^3, x1*x3*x4", 4, Some(4)),
        Powers | PowerSums | Elementary => return None,
    };
    Some(MonomialFixture {
        generators,
        nvars,
        cap,
    })
}
