//! A commutation class through its heap, out to the cluster point reached by
//! reflection functors.

use folded_arq::rootsys::{longest_word, Diagram};
use folded_arq::words::{enumerate_words, foata, join_letters, r_cluster_point, CommClass};

fn main() -> folded_arq::Result<()> {
    let d = Diagram::a(3);
    let w = longest_word(&d);
    let c = CommClass::from_reduced(d.clone(), &w);
    println!("word {}  normal form {}", join_letters(&w), join_letters(&foata(&d, &w)));
    let words = enumerate_words(&c)?;
    println!("class {} has {} words:", c, words.len());
    for x in &words {
        println!("  {}", join_letters(x));
    }
    println!("sinks {:?}, sources {:?}", c.sinks(), c.sources());
    for i in c.sinks() {
        println!("reflect at {}: {}", i, c.reflect_right(i));
    }
    let cluster = r_cluster_point(&c);
    println!("its cluster point has {} classes", cluster.len());
    Ok(())
}
