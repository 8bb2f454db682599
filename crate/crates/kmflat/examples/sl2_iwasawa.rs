//! Iwasawa decompositions in SL(2, C): every element factors uniquely as
//! unipotent * diagonal * unitary (UAK) or the reverse (KAU). The example
//! decomposes random elements, verifies the factors multiply back, and
//! shows the Chevalley involution fixing the unitary part.

use kmflat::sl2::{
    chevalley_theta, is_in_k, is_symmetric_element, iwasawa_decompose, random_sl2, twist_sl2,
    IwasawaOrder, Sl2, SymmetricVerdict,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    for trial in 0..4 {
        let g = random_sl2(&mut rng, trial % 2 == 0);
        for order in [IwasawaOrder::Uak, IwasawaOrder::Kau] {
            let t = iwasawa_decompose(&g, order).unwrap();
            let err = t.compose().dist(&g);
            println!(
                "trial {trial} {:?}: residual {err:.2e}, k unitary: {}",
                order,
                is_in_k(&t.k, 1e-10)
            );
        }
    }

    // theta fixes K pointwise; the twist map lands in the symmetric elements.
    let g = random_sl2(&mut rng, false);
    let t = iwasawa_decompose(&g, IwasawaOrder::Uak).unwrap();
    println!(
        "theta fixes the K factor: {}",
        chevalley_theta(&t.k).dist(&t.k) < 1e-12
    );
    let s = twist_sl2(&g);
    match is_symmetric_element(&s) {
        SymmetricVerdict::Yes { spectrum } => {
            println!("g g^H is symmetric with spectrum ({:.4}, {:.4})", spectrum.0, spectrum.1);
        }
        SymmetricVerdict::No => println!("unexpected: twist not symmetric"),
    }

    // A shear is not symmetric even though its trace is real.
    let shear = Sl2::from_real(1.0, 1.0, 0.0, 1.0).unwrap();
    println!(
        "unipotent shear symmetric: {}",
        matches!(is_symmetric_element(&shear), SymmetricVerdict::Yes { .. })
    );
}
