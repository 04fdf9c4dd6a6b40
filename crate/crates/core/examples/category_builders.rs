//! Builtin categories, products, explicit JSON categories and closed
//! subcategories.

use tracehom::fincat::{product, theta, CategoryDocument, ChainBound, Functor};
use tracehom::Limits;

fn main() -> tracehom::Result<()> {
    let limits = Limits::default();
    let t = theta();
    let t3 = product(&[t.clone(), t.clone(), t.clone()], &limits)?;
    println!(
        "Theta^3: {} objects, {} morphisms",
        t3.object_count(),
        t3.morphism_count()
    );
    match t3.max_nonidentity_chain(8) {
        ChainBound::Exact(n) => println!("longest chain of nonidentity arrows: {n}"),
        ChainBound::AtLeast(n) => println!("chains of at least {n} nonidentity arrows"),
    }
    println!(
        "has a nonidentity retraction: {}",
        t3.has_nonidentity_retraction()
    );

    let square: CategoryDocument = serde_json::from_str(
        r#"{"objects": ["x", "y", "z", "w"],
            "morphisms": [{"name": "f", "dom": "x", "cod": "y"}, {"name": "g", "dom": "x", "cod": "z"},
                          {"name": "h", "dom": "y", "cod": "w"}, {"name": "k", "dom": "z", "cod": "w"},
                          {"name": "d", "dom": "x", "cod": "w"}],
            "compose": [["h", "f", "d"], ["k", "g", "d"]]}"#,
    )?;
    let square = square.to_category(&limits)?;
    for members in [vec!["x"], vec!["w"], vec!["x", "y"]] {
        let idx: Vec<usize> = members
            .iter()
            .map(|m| square.object_index(m).unwrap())
            .collect();
        let (sub, objs, mors) = square.full_subcategory(&idx)?;
        let closed = Functor::inclusion(&sub, &square, objs, mors)?.is_closed_subcategory()?;
        println!("{{{}}} closed: {closed}", members.join(","));
    }
    println!(
        "{}",
        serde_json::to_string(&CategoryDocument::from_category(&t))?
    );
    Ok(())
}
