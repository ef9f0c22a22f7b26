use spinchar_core::combin::{spin_labels, ColorKind};
use spinchar_core::cyclo::CycloField;
use spinchar_core::finitechar::{product_form_character, ProductForm, ProductLabel};
use spinchar_core::group::{enumerate_group, standard_decomposition, Cover, CoverLevel};

fn main() {
    let f = CycloField::for_group(2);
    let cover = Cover::new(2, 4);
    for sl in spin_labels(ColorKind::Half, 1, 4) {
        let lab = ProductLabel::Spin(sl.clone());
        let mut shown = 0;
        for g in enumerate_group(2, 4, CoverLevel::FullCover, 1 << 14).unwrap() {
            let v = product_form_character(&f, &cover, ProductForm::ViEven, None, &lab, &g).unwrap();
            if !v.defined && shown < 3 {
                let dec = standard_decomposition(&g);
                println!(
                    "label {} mu {:?} undefined at z={:?} colors={:?} perm={:?} (singles {:?}, blocks {:?})",
                    sl.lam, sl.mu, g.z, g.colors, g.perm,
                    dec.singles.len(), dec.blocks.iter().map(|b| (b.len(), b.ord)).collect::<Vec<_>>()
                );
                shown += 1;
            }
        }
        println!("label {} done", sl.lam);
    }
}
