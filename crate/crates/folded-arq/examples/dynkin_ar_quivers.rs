//! AR-quivers of ordinary Dynkin quivers of types A and D built from a height
//! function, compared with the combinatorial AR-quiver of the adapted class.

use folded_arq::coxeter::DynkinQuiver;
use folded_arq::quiver::{build_comb_arquiver, build_gamma_q, default_height, to_text};
use folded_arq::rootsys::Diagram;

fn main() {
    for d in [Diagram::a(4), Diagram::d(3)] {
        let quivers = DynkinQuiver::all(d.clone());
        println!("{}: {} quivers", d, quivers.len());
        let q = &quivers[quivers.len() / 2];
        let g = build_gamma_q(q, &default_height(q));
        let comb = build_comb_arquiver(&q.adapted_class());
        println!("{}  same arrows as the combinatorial quiver: {}", q, g.root_arrows() == comb.root_arrows());
        print!("{}", to_text(&g, 0));
        println!();
    }
}
