//! Embedded symmetric positive-weight triangle quadrature tables.
//!
//! Entries are (l0, l1, l2, weight) with barycentric points and weights
//! summing to 1 (weights scale the element measure). Generated offline and
//! verified against closed-form barycentric monomial integrals; the unit
//! tests re-verify exactness at runtime.

pub(crate) static RULE_D01: [[f64; 4]; 1] = [
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 1.0],
];

pub(crate) static RULE_D02: [[f64; 4]; 3] = [
    [0.16666666666666669, 0.16666666666666669, 0.6666666666666666, 0.3333333333333333],
    [0.16666666666666669, 0.6666666666666666, 0.16666666666666669, 0.3333333333333333],
    [0.6666666666666666, 0.16666666666666669, 0.16666666666666669, 0.3333333333333333],
];

pub(crate) static RULE_D04: [[f64; 4]; 6] = [
    [0.10810301816807, 0.445948490915965, 0.445948490915965, 0.223381589678011],
    [0.445948490915965, 0.10810301816807, 0.445948490915965, 0.223381589678011],
    [0.445948490915965, 0.445948490915965, 0.10810301816807, 0.223381589678011],
    [0.09157621350977052, 0.09157621350977052, 0.816847572980459, 0.109951743655322],
    [0.09157621350977052, 0.816847572980459, 0.09157621350977052, 0.109951743655322],
    [0.816847572980459, 0.09157621350977052, 0.09157621350977052, 0.109951743655322],
];

pub(crate) static RULE_D05: [[f64; 4]; 7] = [
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 0.225],
    [0.05971587178977, 0.470142064105115, 0.470142064105115, 0.132394152788506],
    [0.470142064105115, 0.05971587178977, 0.470142064105115, 0.132394152788506],
    [0.470142064105115, 0.470142064105115, 0.05971587178977, 0.132394152788506],
    [0.10128650732345651, 0.10128650732345651, 0.797426985353087, 0.125939180544827],
    [0.10128650732345651, 0.797426985353087, 0.10128650732345651, 0.125939180544827],
    [0.797426985353087, 0.10128650732345651, 0.10128650732345651, 0.125939180544827],
];

pub(crate) static RULE_D06: [[f64; 4]; 12] = [
    [0.24928674517091048, 0.24928674517091048, 0.501426509658179, 0.116786275726379],
    [0.24928674517091048, 0.501426509658179, 0.24928674517091048, 0.116786275726379],
    [0.501426509658179, 0.24928674517091048, 0.24928674517091048, 0.116786275726379],
    [0.053145049844817, 0.310352451033784, 0.636502499121399, 0.082851075618374],
    [0.053145049844817, 0.636502499121399, 0.310352451033784, 0.082851075618374],
    [0.310352451033784, 0.053145049844817, 0.636502499121399, 0.082851075618374],
    [0.310352451033784, 0.636502499121399, 0.053145049844817, 0.082851075618374],
    [0.636502499121399, 0.053145049844817, 0.310352451033784, 0.082851075618374],
    [0.636502499121399, 0.310352451033784, 0.053145049844817, 0.082851075618374],
    [0.063089014491502, 0.063089014491502, 0.873821971016996, 0.050844906370207],
    [0.063089014491502, 0.873821971016996, 0.063089014491502, 0.050844906370207],
    [0.873821971016996, 0.063089014491502, 0.063089014491502, 0.050844906370207],
];

pub(crate) static RULE_D07: [[f64; 4]; 75] = [
    [0.1980134178736082, 0.4009932910631959, 0.4009932910631959, 0.031701264705302705],
    [0.4009932910631959, 0.1980134178736082, 0.4009932910631959, 0.031701264705302705],
    [0.4009932910631959, 0.4009932910631959, 0.1980134178736082, 0.031701264705302705],
    [0.2810125948763069, 0.2810125948763069, 0.43797481024738616, 0.02775931014346333],
    [0.2810125948763069, 0.43797481024738616, 0.2810125948763069, 0.02775931014346333],
    [0.43797481024738616, 0.2810125948763069, 0.2810125948763069, 0.02775931014346333],
    [0.18507071026738944, 0.1980134178736082, 0.6169158718590024, 0.02667152492410696],
    [0.18507071026738944, 0.6169158718590024, 0.1980134178736082, 0.02667152492410696],
    [0.1980134178736082, 0.18507071026738944, 0.6169158718590024, 0.02667152492410696],
    [0.1980134178736082, 0.6169158718590024, 0.18507071026738944, 0.02667152492410696],
    [0.6169158718590024, 0.18507071026738944, 0.1980134178736082, 0.02667152492410696],
    [0.6169158718590024, 0.1980134178736082, 0.18507071026738944, 0.02667152492410696],
    [0.1296959367822541, 0.43232925297035973, 0.43797481024738616, 0.023355003002247812],
    [0.1296959367822541, 0.43797481024738616, 0.43232925297035973, 0.023355003002247812],
    [0.43232925297035973, 0.1296959367822541, 0.43797481024738616, 0.023355003002247812],
    [0.43232925297035973, 0.43797481024738616, 0.1296959367822541, 0.023355003002247812],
    [0.43797481024738616, 0.1296959367822541, 0.43232925297035973, 0.023355003002247812],
    [0.43797481024738616, 0.43232925297035973, 0.1296959367822541, 0.023355003002247812],
    [0.03980985705146872, 0.48009507147426567, 0.48009507147426567, 0.01835265710964651],
    [0.48009507147426567, 0.03980985705146872, 0.48009507147426567, 0.01835265710964651],
    [0.48009507147426567, 0.48009507147426567, 0.03980985705146872, 0.01835265710964651],
    [0.03980985705146872, 0.2215786095523792, 0.7386115333961522, 0.015440814619665552],
    [0.03980985705146872, 0.7386115333961522, 0.2215786095523792, 0.015440814619665552],
    [0.2215786095523792, 0.03980985705146872, 0.7386115333961522, 0.015440814619665552],
    [0.2215786095523792, 0.7386115333961522, 0.03980985705146872, 0.015440814619665552],
    [0.7386115333961522, 0.03980985705146872, 0.2215786095523792, 0.015440814619665552],
    [0.7386115333961522, 0.2215786095523792, 0.03980985705146872, 0.015440814619665552],
    [0.15226786332318193, 0.15226786332318193, 0.6954642733536361, 0.014015311658214723],
    [0.15226786332318193, 0.6954642733536361, 0.15226786332318193, 0.014015311658214723],
    [0.6954642733536361, 0.15226786332318193, 0.15226786332318193, 0.014015311658214723],
    [0.037621252345111204, 0.1980134178736082, 0.7643653297812807, 0.013202722088031601],
    [0.037621252345111204, 0.7643653297812807, 0.1980134178736082, 0.013202722088031601],
    [0.1980134178736082, 0.037621252345111204, 0.7643653297812807, 0.013202722088031601],
    [0.1980134178736082, 0.7643653297812807, 0.037621252345111204, 0.013202722088031601],
    [0.7643653297812807, 0.037621252345111204, 0.1980134178736082, 0.013202722088031601],
    [0.7643653297812807, 0.1980134178736082, 0.037621252345111204, 0.013202722088031601],
    [0.07027629200828171, 0.23425943463808213, 0.6954642733536361, 0.011791634740322307],
    [0.07027629200828171, 0.6954642733536361, 0.23425943463808213, 0.011791634740322307],
    [0.23425943463808213, 0.07027629200828171, 0.6954642733536361, 0.011791634740322307],
    [0.23425943463808213, 0.6954642733536361, 0.07027629200828171, 0.011791634740322307],
    [0.6954642733536361, 0.07027629200828171, 0.23425943463808213, 0.011791634740322307],
    [0.6954642733536361, 0.23425943463808213, 0.07027629200828171, 0.011791634740322307],
    [0.026364644944470925, 0.43797481024738616, 0.535660544808143, 0.011561004287577155],
    [0.026364644944470925, 0.535660544808143, 0.43797481024738616, 0.011561004287577155],
    [0.43797481024738616, 0.026364644944470925, 0.535660544808143, 0.011561004287577155],
    [0.43797481024738616, 0.535660544808143, 0.026364644944470925, 0.011561004287577155],
    [0.535660544808143, 0.026364644944470925, 0.43797481024738616, 0.011561004287577155],
    [0.535660544808143, 0.43797481024738616, 0.026364644944470925, 0.011561004287577155],
    [0.03980985705146872, 0.04504259356980374, 0.9151475493787276, 0.007643386901061693],
    [0.03980985705146872, 0.9151475493787276, 0.04504259356980374, 0.007643386901061693],
    [0.04504259356980374, 0.03980985705146872, 0.9151475493787276, 0.007643386901061693],
    [0.04504259356980374, 0.9151475493787276, 0.03980985705146872, 0.007643386901061693],
    [0.9151475493787276, 0.03980985705146872, 0.04504259356980374, 0.007643386901061693],
    [0.9151475493787276, 0.04504259356980374, 0.03980985705146872, 0.007643386901061693],
    [0.014285794395571387, 0.2902499322507925, 0.6954642733536361, 0.005836999454775897],
    [0.014285794395571387, 0.6954642733536361, 0.2902499322507925, 0.005836999454775897],
    [0.2902499322507925, 0.014285794395571387, 0.6954642733536361, 0.005836999454775897],
    [0.2902499322507925, 0.6954642733536361, 0.014285794395571387, 0.005836999454775897],
    [0.6954642733536361, 0.014285794395571387, 0.2902499322507925, 0.005836999454775897],
    [0.6954642733536361, 0.2902499322507925, 0.014285794395571387, 0.005836999454775897],
    [0.04926754289941321, 0.04926754289941321, 0.9014649142011736, 0.002986271198187578],
    [0.04926754289941321, 0.9014649142011736, 0.04926754289941321, 0.002986271198187578],
    [0.9014649142011736, 0.04926754289941321, 0.04926754289941321, 0.002986271198187578],
    [0.022738483063764033, 0.07579660273506239, 0.9014649142011736, 0.002512467796885083],
    [0.022738483063764033, 0.9014649142011736, 0.07579660273506239, 0.002512467796885083],
    [0.07579660273506239, 0.022738483063764033, 0.9014649142011736, 0.002512467796885083],
    [0.07579660273506239, 0.9014649142011736, 0.022738483063764033, 0.002512467796885083],
    [0.9014649142011736, 0.022738483063764033, 0.07579660273506239, 0.002512467796885083],
    [0.9014649142011736, 0.07579660273506239, 0.022738483063764033, 0.002512467796885083],
    [0.00462228846504643, 0.09391279733377998, 0.9014649142011736, 0.0012437014445852294],
    [0.00462228846504643, 0.9014649142011736, 0.09391279733377998, 0.0012437014445852294],
    [0.09391279733377998, 0.00462228846504643, 0.9014649142011736, 0.0012437014445852294],
    [0.09391279733377998, 0.9014649142011736, 0.00462228846504643, 0.0012437014445852294],
    [0.9014649142011736, 0.00462228846504643, 0.09391279733377998, 0.0012437014445852294],
    [0.9014649142011736, 0.09391279733377998, 0.00462228846504643, 0.0012437014445852294],
];

pub(crate) static RULE_D09: [[f64; 4]; 108] = [
    [0.252403568076518, 0.3369846902811543, 0.4106117416423277, 0.021959599267191127],
    [0.252403568076518, 0.4106117416423277, 0.3369846902811543, 0.021959599267191127],
    [0.3369846902811543, 0.252403568076518, 0.4106117416423277, 0.021959599267191127],
    [0.3369846902811543, 0.4106117416423277, 0.252403568076518, 0.021959599267191127],
    [0.4106117416423277, 0.252403568076518, 0.3369846902811543, 0.021959599267191127],
    [0.4106117416423277, 0.3369846902811543, 0.252403568076518, 0.021959599267191127],
    [0.1480785996684843, 0.324318304588776, 0.5276030957427397, 0.02114074106046934],
    [0.1480785996684843, 0.5276030957427397, 0.324318304588776, 0.02114074106046934],
    [0.324318304588776, 0.1480785996684843, 0.5276030957427397, 0.02114074106046934],
    [0.324318304588776, 0.5276030957427397, 0.1480785996684843, 0.02114074106046934],
    [0.5276030957427397, 0.1480785996684843, 0.324318304588776, 0.02114074106046934],
    [0.5276030957427397, 0.324318304588776, 0.1480785996684843, 0.02114074106046934],
    [0.1123116817809537, 0.3369846902811543, 0.550703627937892, 0.016930847726031772],
    [0.1123116817809537, 0.550703627937892, 0.3369846902811543, 0.016930847726031772],
    [0.3369846902811543, 0.1123116817809537, 0.550703627937892, 0.016930847726031772],
    [0.3369846902811543, 0.550703627937892, 0.1123116817809537, 0.016930847726031772],
    [0.550703627937892, 0.1123116817809537, 0.3369846902811543, 0.016930847726031772],
    [0.550703627937892, 0.3369846902811543, 0.1123116817809537, 0.016930847726031772],
    [0.14431148695041665, 0.1480785996684843, 0.707609913381099, 0.01629950817203856],
    [0.14431148695041665, 0.707609913381099, 0.1480785996684843, 0.01629950817203856],
    [0.1480785996684843, 0.14431148695041665, 0.707609913381099, 0.01629950817203856],
    [0.1480785996684843, 0.707609913381099, 0.14431148695041665, 0.01629950817203856],
    [0.707609913381099, 0.14431148695041665, 0.1480785996684843, 0.01629950817203856],
    [0.707609913381099, 0.1480785996684843, 0.14431148695041665, 0.01629950817203856],
    [0.16800951912119183, 0.273318962107258, 0.5586715187715502, 0.015388309100905486],
    [0.16800951912119183, 0.5586715187715502, 0.273318962107258, 0.015388309100905486],
    [0.273318962107258, 0.16800951912119183, 0.5586715187715502, 0.015388309100905486],
    [0.273318962107258, 0.5586715187715502, 0.16800951912119183, 0.015388309100905486],
    [0.5586715187715502, 0.16800951912119183, 0.273318962107258, 0.015388309100905486],
    [0.5586715187715502, 0.273318962107258, 0.16800951912119183, 0.015388309100905486],
    [0.07475897346264909, 0.3665695077658007, 0.5586715187715502, 0.01186438399801752],
    [0.07475897346264909, 0.5586715187715502, 0.3665695077658007, 0.01186438399801752],
    [0.3665695077658007, 0.07475897346264909, 0.5586715187715502, 0.01186438399801752],
    [0.3665695077658007, 0.5586715187715502, 0.07475897346264909, 0.01186438399801752],
    [0.5586715187715502, 0.07475897346264909, 0.3665695077658007, 0.01186438399801752],
    [0.5586715187715502, 0.3665695077658007, 0.07475897346264909, 0.01186438399801752],
    [0.02931642715978494, 0.36952992437237664, 0.6011536484678384, 0.01127833712000848],
    [0.02931642715978494, 0.6011536484678384, 0.36952992437237664, 0.01127833712000848],
    [0.36952992437237664, 0.02931642715978494, 0.6011536484678384, 0.01127833712000848],
    [0.36952992437237664, 0.6011536484678384, 0.02931642715978494, 0.01127833712000848],
    [0.6011536484678384, 0.02931642715978494, 0.36952992437237664, 0.01127833712000848],
    [0.6011536484678384, 0.36952992437237664, 0.02931642715978494, 0.01127833712000848],
    [0.02931642715978494, 0.16442924159482744, 0.8062543312453876, 0.008695596220055253],
    [0.02931642715978494, 0.8062543312453876, 0.16442924159482744, 0.008695596220055253],
    [0.16442924159482744, 0.02931642715978494, 0.8062543312453876, 0.008695596220055253],
    [0.16442924159482744, 0.8062543312453876, 0.02931642715978494, 0.008695596220055253],
    [0.8062543312453876, 0.02931642715978494, 0.16442924159482744, 0.008695596220055253],
    [0.8062543312453876, 0.16442924159482744, 0.02931642715978494, 0.008695596220055253],
    [0.022386872978030627, 0.3369846902811543, 0.640628436740815, 0.008040404269510037],
    [0.022386872978030627, 0.640628436740815, 0.3369846902811543, 0.008040404269510037],
    [0.3369846902811543, 0.022386872978030627, 0.640628436740815, 0.008040404269510037],
    [0.3369846902811543, 0.640628436740815, 0.022386872978030627, 0.008040404269510037],
    [0.640628436740815, 0.022386872978030627, 0.3369846902811543, 0.008040404269510037],
    [0.640628436740815, 0.3369846902811543, 0.022386872978030627, 0.008040404269510037],
    [0.028765333012559118, 0.1480785996684843, 0.8231560673189565, 0.007740583177998317],
    [0.028765333012559118, 0.8231560673189565, 0.1480785996684843, 0.007740583177998317],
    [0.1480785996684843, 0.028765333012559118, 0.8231560673189565, 0.007740583177998317],
    [0.1480785996684843, 0.8231560673189565, 0.028765333012559118, 0.007740583177998317],
    [0.8231560673189565, 0.028765333012559118, 0.1480785996684843, 0.007740583177998317],
    [0.8231560673189565, 0.1480785996684843, 0.028765333012559118, 0.007740583177998317],
    [0.08785045497599718, 0.1429156829939483, 0.7692338620300545, 0.006855744819177555],
    [0.08785045497599718, 0.7692338620300545, 0.1429156829939483, 0.006855744819177555],
    [0.1429156829939483, 0.08785045497599718, 0.7692338620300545, 0.006855744819177555],
    [0.1429156829939483, 0.7692338620300545, 0.08785045497599718, 0.006855744819177555],
    [0.7692338620300545, 0.08785045497599718, 0.1429156829939483, 0.006855744819177555],
    [0.7692338620300545, 0.1429156829939483, 0.08785045497599718, 0.006855744819177555],
    [0.014901563366671153, 0.42642691786177866, 0.5586715187715502, 0.005634357197962056],
    [0.014901563366671153, 0.5586715187715502, 0.42642691786177866, 0.005634357197962056],
    [0.42642691786177866, 0.014901563366671153, 0.5586715187715502, 0.005634357197962056],
    [0.42642691786177866, 0.5586715187715502, 0.014901563366671153, 0.005634357197962056],
    [0.5586715187715502, 0.014901563366671153, 0.42642691786177866, 0.005634357197962056],
    [0.5586715187715502, 0.42642691786177866, 0.014901563366671153, 0.005634357197962056],
    [0.039090700732824245, 0.19167543723712124, 0.7692338620300545, 0.005285778222530992],
    [0.039090700732824245, 0.7692338620300545, 0.19167543723712124, 0.005285778222530992],
    [0.19167543723712124, 0.039090700732824245, 0.7692338620300545, 0.005285778222530992],
    [0.19167543723712124, 0.7692338620300545, 0.039090700732824245, 0.005285778222530992],
    [0.7692338620300545, 0.039090700732824245, 0.19167543723712124, 0.005285778222530992],
    [0.7692338620300545, 0.19167543723712124, 0.039090700732824245, 0.005285778222530992],
    [0.02931642715978494, 0.03277536661445988, 0.9379082062257551, 0.004129510235105897],
    [0.02931642715978494, 0.9379082062257551, 0.03277536661445988, 0.004129510235105897],
    [0.03277536661445988, 0.02931642715978494, 0.9379082062257551, 0.004129510235105897],
    [0.03277536661445988, 0.9379082062257551, 0.02931642715978494, 0.004129510235105897],
    [0.9379082062257551, 0.02931642715978494, 0.03277536661445988, 0.004129510235105897],
    [0.9379082062257551, 0.03277536661445988, 0.02931642715978494, 0.004129510235105897],
    [0.007791874701286429, 0.22297426326865907, 0.7692338620300545, 0.0025101988084611053],
    [0.007791874701286429, 0.7692338620300545, 0.22297426326865907, 0.0025101988084611053],
    [0.22297426326865907, 0.007791874701286429, 0.7692338620300545, 0.0025101988084611053],
    [0.22297426326865907, 0.7692338620300545, 0.007791874701286429, 0.0025101988084611053],
    [0.7692338620300545, 0.007791874701286429, 0.22297426326865907, 0.0025101988084611053],
    [0.7692338620300545, 0.22297426326865907, 0.007791874701286429, 0.0025101988084611053],
    [0.027811082115360607, 0.04524324656489835, 0.926945671319741, 0.0013629243943632397],
    [0.027811082115360607, 0.926945671319741, 0.04524324656489835, 0.0013629243943632397],
    [0.04524324656489835, 0.027811082115360607, 0.926945671319741, 0.0013629243943632397],
    [0.04524324656489835, 0.926945671319741, 0.027811082115360607, 0.0013629243943632397],
    [0.926945671319741, 0.027811082115360607, 0.04524324656489835, 0.0013629243943632397],
    [0.926945671319741, 0.04524324656489835, 0.027811082115360607, 0.0013629243943632397],
    [0.012375060417440052, 0.060679268262818914, 0.926945671319741, 0.0010508145026823928],
    [0.012375060417440052, 0.926945671319741, 0.060679268262818914, 0.0010508145026823928],
    [0.060679268262818914, 0.012375060417440052, 0.926945671319741, 0.0010508145026823928],
    [0.060679268262818914, 0.926945671319741, 0.012375060417440052, 0.0010508145026823928],
    [0.926945671319741, 0.012375060417440052, 0.060679268262818914, 0.0010508145026823928],
    [0.926945671319741, 0.060679268262818914, 0.012375060417440052, 0.0010508145026823928],
    [0.002466697152670245, 0.07058763152758872, 0.926945671319741, 0.0004990283741575435],
    [0.002466697152670245, 0.926945671319741, 0.07058763152758872, 0.0004990283741575435],
    [0.07058763152758872, 0.002466697152670245, 0.926945671319741, 0.0004990283741575435],
    [0.07058763152758872, 0.926945671319741, 0.002466697152670245, 0.0004990283741575435],
    [0.926945671319741, 0.002466697152670245, 0.07058763152758872, 0.0004990283741575435],
    [0.926945671319741, 0.07058763152758872, 0.002466697152670245, 0.0004990283741575435],
];

pub(crate) static RULE_D11: [[f64; 4]; 147] = [
    [0.2657898227845895, 0.36710508860770524, 0.36710508860770524, 0.017748065147588914],
    [0.36710508860770524, 0.2657898227845895, 0.36710508860770524, 0.017748065147588914],
    [0.36710508860770524, 0.36710508860770524, 0.2657898227845895, 0.017748065147588914],
    [0.2181172683502983, 0.2657898227845895, 0.5160929088651122, 0.016213890916598073],
    [0.2181172683502983, 0.5160929088651122, 0.2657898227845895, 0.016213890916598073],
    [0.2657898227845895, 0.2181172683502983, 0.5160929088651122, 0.016213890916598073],
    [0.2657898227845895, 0.5160929088651122, 0.2181172683502983, 0.016213890916598073],
    [0.5160929088651122, 0.2181172683502983, 0.2657898227845895, 0.016213890916598073],
    [0.5160929088651122, 0.2657898227845895, 0.2181172683502983, 0.016213890916598073],
    [0.11467905316090415, 0.44266047341954795, 0.44266047341954795, 0.015396119780606158],
    [0.44266047341954795, 0.11467905316090415, 0.44266047341954795, 0.015396119780606158],
    [0.44266047341954795, 0.44266047341954795, 0.11467905316090415, 0.015396119780606158],
    [0.2735768131652777, 0.2735768131652777, 0.45284637366944464, 0.014924635003071384],
    [0.2735768131652777, 0.45284637366944464, 0.2735768131652777, 0.014924635003071384],
    [0.45284637366944464, 0.2735768131652777, 0.2735768131652777, 0.014924635003071384],
    [0.11467905316090415, 0.2630088665758012, 0.6223120802632947, 0.014065251878768245],
    [0.11467905316090415, 0.6223120802632947, 0.2630088665758012, 0.014065251878768245],
    [0.2630088665758012, 0.11467905316090415, 0.6223120802632947, 0.014065251878768245],
    [0.2630088665758012, 0.6223120802632947, 0.11467905316090415, 0.014065251878768245],
    [0.6223120802632947, 0.11467905316090415, 0.2630088665758012, 0.014065251878768245],
    [0.6223120802632947, 0.2630088665758012, 0.11467905316090415, 0.014065251878768245],
    [0.16254699001286968, 0.38460663631768577, 0.45284637366944464, 0.013634523081673205],
    [0.16254699001286968, 0.45284637366944464, 0.38460663631768577, 0.013634523081673205],
    [0.38460663631768577, 0.16254699001286968, 0.45284637366944464, 0.013634523081673205],
    [0.38460663631768577, 0.45284637366944464, 0.16254699001286968, 0.013634523081673205],
    [0.45284637366944464, 0.16254699001286968, 0.38460663631768577, 0.013634523081673205],
    [0.45284637366944464, 0.38460663631768577, 0.16254699001286968, 0.013634523081673205],
    [0.09488521701286282, 0.2657898227845895, 0.6393249602025477, 0.011877306933783879],
    [0.09488521701286282, 0.6393249602025477, 0.2657898227845895, 0.011877306933783879],
    [0.2657898227845895, 0.09488521701286282, 0.6393249602025477, 0.011877306933783879],
    [0.2657898227845895, 0.6393249602025477, 0.09488521701286282, 0.011877306933783879],
    [0.6393249602025477, 0.09488521701286282, 0.2657898227845895, 0.011877306933783879],
    [0.6393249602025477, 0.2657898227845895, 0.09488521701286282, 0.011877306933783879],
    [0.11441392774676132, 0.11467905316090415, 0.7709070190923346, 0.010303345108489357],
    [0.11441392774676132, 0.7709070190923346, 0.11467905316090415, 0.010303345108489357],
    [0.11467905316090415, 0.11441392774676132, 0.7709070190923346, 0.010303345108489357],
    [0.11467905316090415, 0.7709070190923346, 0.11441392774676132, 0.010303345108489357],
    [0.7709070190923346, 0.11441392774676132, 0.11467905316090415, 0.010303345108489357],
    [0.7709070190923346, 0.11467905316090415, 0.11441392774676132, 0.010303345108489357],
    [0.0707110745463253, 0.45284637366944464, 0.4764425517842301, 0.009987819479592952],
    [0.0707110745463253, 0.4764425517842301, 0.45284637366944464, 0.009987819479592952],
    [0.45284637366944464, 0.0707110745463253, 0.4764425517842301, 0.009987819479592952],
    [0.45284637366944464, 0.4764425517842301, 0.0707110745463253, 0.009987819479592952],
    [0.4764425517842301, 0.0707110745463253, 0.45284637366944464, 0.009987819479592952],
    [0.4764425517842301, 0.45284637366944464, 0.0707110745463253, 0.009987819479592952],
    [0.17631235855658484, 0.17631235855658484, 0.6473752828868303, 0.009248697847709292],
    [0.17631235855658484, 0.6473752828868303, 0.17631235855658484, 0.009248697847709292],
    [0.6473752828868303, 0.17631235855658484, 0.17631235855658484, 0.009248697847709292],
    [0.10475684270848173, 0.24786787440468794, 0.6473752828868303, 0.008449224001395198],
    [0.10475684270848173, 0.6473752828868303, 0.24786787440468794, 0.008449224001395198],
    [0.24786787440468794, 0.10475684270848173, 0.6473752828868303, 0.008449224001395198],
    [0.24786787440468794, 0.6473752828868303, 0.10475684270848173, 0.008449224001395198],
    [0.6473752828868303, 0.10475684270848173, 0.24786787440468794, 0.008449224001395198],
    [0.6473752828868303, 0.24786787440468794, 0.10475684270848173, 0.008449224001395198],
    [0.0224793864387125, 0.48876030678064375, 0.48876030678064375, 0.007797357842946203],
    [0.48876030678064375, 0.0224793864387125, 0.48876030678064375, 0.007797357842946203],
    [0.48876030678064375, 0.48876030678064375, 0.0224793864387125, 0.007797357842946203],
    [0.0224793864387125, 0.2903993060879903, 0.6871213074732971, 0.007123340400876609],
    [0.0224793864387125, 0.6871213074732971, 0.2903993060879903, 0.007123340400876609],
    [0.2903993060879903, 0.0224793864387125, 0.6871213074732971, 0.007123340400876609],
    [0.2903993060879903, 0.6871213074732971, 0.0224793864387125, 0.007123340400876609],
    [0.6871213074732971, 0.0224793864387125, 0.2903993060879903, 0.007123340400876609],
    [0.6871213074732971, 0.2903993060879903, 0.0224793864387125, 0.007123340400876609],
    [0.04557124628029494, 0.3070534708328747, 0.6473752828868303, 0.006189385837925706],
    [0.04557124628029494, 0.6473752828868303, 0.3070534708328747, 0.006189385837925706],
    [0.3070534708328747, 0.04557124628029494, 0.6473752828868303, 0.006189385837925706],
    [0.3070534708328747, 0.6473752828868303, 0.04557124628029494, 0.006189385837925706],
    [0.6473752828868303, 0.04557124628029494, 0.3070534708328747, 0.006189385837925706],
    [0.6473752828868303, 0.3070534708328747, 0.04557124628029494, 0.006189385837925706],
    [0.018682744348842747, 0.2657898227845895, 0.7155274328665677, 0.005498402009019764],
    [0.018682744348842747, 0.7155274328665677, 0.2657898227845895, 0.005498402009019764],
    [0.2657898227845895, 0.018682744348842747, 0.7155274328665677, 0.005498402009019764],
    [0.2657898227845895, 0.7155274328665677, 0.018682744348842747, 0.005498402009019764],
    [0.7155274328665677, 0.018682744348842747, 0.2657898227845895, 0.005498402009019764],
    [0.7155274328665677, 0.2657898227845895, 0.018682744348842747, 0.005498402009019764],
    [0.0224793864387125, 0.12632929701966925, 0.8511913165416183, 0.005218124432330044],
    [0.0224793864387125, 0.8511913165416183, 0.12632929701966925, 0.005218124432330044],
    [0.12632929701966925, 0.0224793864387125, 0.8511913165416183, 0.005218124432330044],
    [0.12632929701966925, 0.8511913165416183, 0.0224793864387125, 0.005218124432330044],
    [0.8511913165416183, 0.0224793864387125, 0.12632929701966925, 0.005218124432330044],
    [0.8511913165416183, 0.12632929701966925, 0.0224793864387125, 0.005218124432330044],
    [0.02252791561566366, 0.11467905316090415, 0.8627930312234322, 0.004769762519397454],
    [0.02252791561566366, 0.8627930312234322, 0.11467905316090415, 0.004769762519397454],
    [0.11467905316090415, 0.02252791561566366, 0.8627930312234322, 0.004769762519397454],
    [0.11467905316090415, 0.8627930312234322, 0.02252791561566366, 0.004769762519397454],
    [0.8627930312234322, 0.02252791561566366, 0.11467905316090415, 0.004769762519397454],
    [0.8627930312234322, 0.11467905316090415, 0.02252791561566366, 0.004769762519397454],
    [0.013922895156596097, 0.45284637366944464, 0.5332307311739594, 0.004623695169156088],
    [0.013922895156596097, 0.5332307311739594, 0.45284637366944464, 0.004623695169156088],
    [0.45284637366944464, 0.013922895156596097, 0.5332307311739594, 0.004623695169156088],
    [0.45284637366944464, 0.5332307311739594, 0.013922895156596097, 0.004623695169156088],
    [0.5332307311739594, 0.013922895156596097, 0.45284637366944464, 0.004623695169156088],
    [0.5332307311739594, 0.45284637366944464, 0.013922895156596097, 0.004623695169156088],
    [0.0901203458684462, 0.0901203458684462, 0.8197593082631076, 0.0038185248004351593],
    [0.0901203458684462, 0.8197593082631076, 0.0901203458684462, 0.0038185248004351593],
    [0.8197593082631076, 0.0901203458684462, 0.0901203458684462, 0.0038185248004351593],
    [0.05354544045728326, 0.12669525127960912, 0.8197593082631076, 0.0034884447437917507],
    [0.05354544045728326, 0.8197593082631076, 0.12669525127960912, 0.0034884447437917507],
    [0.12669525127960912, 0.05354544045728326, 0.8197593082631076, 0.0034884447437917507],
    [0.12669525127960912, 0.8197593082631076, 0.05354544045728326, 0.0034884447437917507],
    [0.8197593082631076, 0.05354544045728326, 0.12669525127960912, 0.0034884447437917507],
    [0.8197593082631076, 0.12669525127960912, 0.05354544045728326, 0.0034884447437917507],
    [0.00897290400671671, 0.343651813106453, 0.6473752828868303, 0.0028652733919883075],
    [0.00897290400671671, 0.6473752828868303, 0.343651813106453, 0.0028652733919883075],
    [0.343651813106453, 0.00897290400671671, 0.6473752828868303, 0.0028652733919883075],
    [0.343651813106453, 0.6473752828868303, 0.00897290400671671, 0.0028652733919883075],
    [0.6473752828868303, 0.00897290400671671, 0.343651813106453, 0.0028652733919883075],
    [0.6473752828868303, 0.343651813106453, 0.00897290400671671, 0.0028652733919883075],
    [0.0232932989499898, 0.1569473927869026, 0.8197593082631076, 0.0025554217156564564],
    [0.0232932989499898, 0.8197593082631076, 0.1569473927869026, 0.0025554217156564564],
    [0.1569473927869026, 0.0232932989499898, 0.8197593082631076, 0.0025554217156564564],
    [0.1569473927869026, 0.8197593082631076, 0.0232932989499898, 0.0025554217156564564],
    [0.8197593082631076, 0.0232932989499898, 0.1569473927869026, 0.0025554217156564564],
    [0.8197593082631076, 0.1569473927869026, 0.0232932989499898, 0.0025554217156564564],
    [0.0224793864387125, 0.024874032376060777, 0.9526465811852267, 0.0024156440531505345],
    [0.0224793864387125, 0.9526465811852267, 0.024874032376060777, 0.0024156440531505345],
    [0.024874032376060777, 0.0224793864387125, 0.9526465811852267, 0.0024156440531505345],
    [0.024874032376060777, 0.9526465811852267, 0.0224793864387125, 0.0024156440531505345],
    [0.9526465811852267, 0.0224793864387125, 0.024874032376060777, 0.0024156440531505345],
    [0.9526465811852267, 0.024874032376060777, 0.0224793864387125, 0.0024156440531505345],
    [0.004586412541637887, 0.1756542791952545, 0.8197593082631076, 0.0011829900476253755],
    [0.004586412541637887, 0.8197593082631076, 0.1756542791952545, 0.0011829900476253755],
    [0.1756542791952545, 0.004586412541637887, 0.8197593082631076, 0.0011829900476253755],
    [0.1756542791952545, 0.8197593082631076, 0.004586412541637887, 0.0011829900476253755],
    [0.8197593082631076, 0.004586412541637887, 0.1756542791952545, 0.0011829900476253755],
    [0.8197593082631076, 0.1756542791952545, 0.004586412541637887, 0.0011829900476253755],
    [0.028131280268461067, 0.028131280268461067, 0.9437374394630779, 0.0007264635232210561],
    [0.028131280268461067, 0.9437374394630779, 0.028131280268461067, 0.0007264635232210561],
    [0.9437374394630779, 0.028131280268461067, 0.028131280268461067, 0.0007264635232210561],
    [0.0167143365694675, 0.03954822396745464, 0.9437374394630779, 0.0006636667277499754],
    [0.0167143365694675, 0.9437374394630779, 0.03954822396745464, 0.0006636667277499754],
    [0.03954822396745464, 0.0167143365694675, 0.9437374394630779, 0.0006636667277499754],
    [0.03954822396745464, 0.9437374394630779, 0.0167143365694675, 0.0006636667277499754],
    [0.9437374394630779, 0.0167143365694675, 0.03954822396745464, 0.0006636667277499754],
    [0.9437374394630779, 0.03954822396745464, 0.0167143365694675, 0.0006636667277499754],
    [0.0072710586585602805, 0.048991501878361855, 0.9437374394630779, 0.000486161740434376],
    [0.0072710586585602805, 0.9437374394630779, 0.048991501878361855, 0.000486161740434376],
    [0.048991501878361855, 0.0072710586585602805, 0.9437374394630779, 0.000486161740434376],
    [0.048991501878361855, 0.9437374394630779, 0.0072710586585602805, 0.000486161740434376],
    [0.9437374394630779, 0.0072710586585602805, 0.048991501878361855, 0.000486161740434376],
    [0.9437374394630779, 0.048991501878361855, 0.0072710586585602805, 0.000486161740434376],
    [0.0014316595813329493, 0.054830900955589186, 0.9437374394630779, 0.00022506050447425094],
    [0.0014316595813329493, 0.9437374394630779, 0.054830900955589186, 0.00022506050447425094],
    [0.054830900955589186, 0.0014316595813329493, 0.9437374394630779, 0.00022506050447425094],
    [0.054830900955589186, 0.9437374394630779, 0.0014316595813329493, 0.00022506050447425094],
    [0.9437374394630779, 0.0014316595813329493, 0.054830900955589186, 0.00022506050447425094],
    [0.9437374394630779, 0.054830900955589186, 0.0014316595813329493, 0.00022506050447425094],
];

pub(crate) static RULE_D13: [[f64; 4]; 192] = [
    [0.21430847939563075, 0.32078423870522166, 0.46490728189914765, 0.013601343001369537],
    [0.21430847939563075, 0.46490728189914765, 0.32078423870522166, 0.013601343001369537],
    [0.32078423870522166, 0.21430847939563075, 0.46490728189914765, 0.013601343001369537],
    [0.32078423870522166, 0.46490728189914765, 0.21430847939563075, 0.013601343001369537],
    [0.46490728189914765, 0.21430847939563075, 0.32078423870522166, 0.013601343001369537],
    [0.46490728189914765, 0.32078423870522166, 0.21430847939563075, 0.013601343001369537],
    [0.2564292182820218, 0.3716386171347059, 0.3719321645832723, 0.012820552512502704],
    [0.2564292182820218, 0.3719321645832723, 0.3716386171347059, 0.012820552512502704],
    [0.3716386171347059, 0.2564292182820218, 0.3719321645832723, 0.012820552512502704],
    [0.3716386171347059, 0.3719321645832723, 0.2564292182820218, 0.012820552512502704],
    [0.3719321645832723, 0.2564292182820218, 0.3716386171347059, 0.012820552512502704],
    [0.3719321645832723, 0.3716386171347059, 0.2564292182820218, 0.012820552512502704],
    [0.18639258116516502, 0.21430847939563075, 0.5992989394392043, 0.011764605664607379],
    [0.18639258116516502, 0.5992989394392043, 0.21430847939563075, 0.011764605664607379],
    [0.21430847939563075, 0.18639258116516502, 0.5992989394392043, 0.011764605664607379],
    [0.21430847939563075, 0.5992989394392043, 0.18639258116516502, 0.011764605664607379],
    [0.5992989394392043, 0.18639258116516502, 0.21430847939563075, 0.011764605664607379],
    [0.5992989394392043, 0.21430847939563075, 0.18639258116516502, 0.011764605664607379],
    [0.14899891613962127, 0.3719321645832723, 0.4790689192771065, 0.011089253810950765],
    [0.14899891613962127, 0.4790689192771065, 0.3719321645832723, 0.011089253810950765],
    [0.3719321645832723, 0.14899891613962127, 0.4790689192771065, 0.011089253810950765],
    [0.3719321645832723, 0.4790689192771065, 0.14899891613962127, 0.011089253810950765],
    [0.4790689192771065, 0.14899891613962127, 0.3719321645832723, 0.011089253810950765],
    [0.4790689192771065, 0.3719321645832723, 0.14899891613962127, 0.011089253810950765],
    [0.09132360789979399, 0.3709968314855339, 0.537679560614672, 0.011015797410060806],
    [0.09132360789979399, 0.537679560614672, 0.3709968314855339, 0.011015797410060806],
    [0.3709968314855339, 0.09132360789979399, 0.537679560614672, 0.011015797410060806],
    [0.3709968314855339, 0.537679560614672, 0.09132360789979399, 0.011015797410060806],
    [0.537679560614672, 0.09132360789979399, 0.3709968314855339, 0.011015797410060806],
    [0.537679560614672, 0.3709968314855339, 0.09132360789979399, 0.011015797410060806],
    [0.1856923986606143, 0.26912091653595904, 0.5451866848034267, 0.009574803461975104],
    [0.1856923986606143, 0.5451866848034267, 0.26912091653595904, 0.009574803461975104],
    [0.26912091653595904, 0.1856923986606143, 0.5451866848034267, 0.009574803461975104],
    [0.26912091653595904, 0.5451866848034267, 0.1856923986606143, 0.009574803461975104],
    [0.5451866848034267, 0.1856923986606143, 0.26912091653595904, 0.009574803461975104],
    [0.5451866848034267, 0.26912091653595904, 0.1856923986606143, 0.009574803461975104],
    [0.09132360789979399, 0.21556874896285483, 0.6931076431373512, 0.009528214426878243],
    [0.09132360789979399, 0.6931076431373512, 0.21556874896285483, 0.009528214426878243],
    [0.21556874896285483, 0.09132360789979399, 0.6931076431373512, 0.009528214426878243],
    [0.21556874896285483, 0.6931076431373512, 0.09132360789979399, 0.009528214426878243],
    [0.6931076431373512, 0.09132360789979399, 0.21556874896285483, 0.009528214426878243],
    [0.6931076431373512, 0.21556874896285483, 0.09132360789979399, 0.009528214426878243],
    [0.07987871227536525, 0.21430847939563075, 0.7058128083290041, 0.008339718689446586],
    [0.07987871227536525, 0.7058128083290041, 0.21430847939563075, 0.008339718689446586],
    [0.21430847939563075, 0.07987871227536525, 0.7058128083290041, 0.008339718689446586],
    [0.21430847939563075, 0.7058128083290041, 0.07987871227536525, 0.008339718689446586],
    [0.7058128083290041, 0.07987871227536525, 0.21430847939563075, 0.008339718689446586],
    [0.7058128083290041, 0.21430847939563075, 0.07987871227536525, 0.008339718689446586],
    [0.1078970887996416, 0.3469162263969317, 0.5451866848034267, 0.00828181357053582],
    [0.1078970887996416, 0.5451866848034267, 0.3469162263969317, 0.00828181357053582],
    [0.3469162263969317, 0.1078970887996416, 0.5451866848034267, 0.00828181357053582],
    [0.3469162263969317, 0.5451866848034267, 0.1078970887996416, 0.00828181357053582],
    [0.5451866848034267, 0.1078970887996416, 0.3469162263969317, 0.00828181357053582],
    [0.5451866848034267, 0.3469162263969317, 0.1078970887996416, 0.00828181357053582],
    [0.06385362269924089, 0.3719321645832723, 0.5642142127174868, 0.007860973830803641],
    [0.06385362269924089, 0.5642142127174868, 0.3719321645832723, 0.007860973830803641],
    [0.3719321645832723, 0.06385362269924089, 0.5642142127174868, 0.007860973830803641],
    [0.3719321645832723, 0.5642142127174868, 0.06385362269924089, 0.007860973830803641],
    [0.5642142127174868, 0.06385362269924089, 0.3719321645832723, 0.007860973830803641],
    [0.5642142127174868, 0.3719321645832723, 0.06385362269924089, 0.007860973830803641],
    [0.09132360789979399, 0.09238218584840571, 0.8162942062518003, 0.006754380911546089],
    [0.09132360789979399, 0.8162942062518003, 0.09238218584840571, 0.006754380911546089],
    [0.09238218584840571, 0.09132360789979399, 0.8162942062518003, 0.006754380911546089],
    [0.09238218584840571, 0.8162942062518003, 0.09132360789979399, 0.006754380911546089],
    [0.8162942062518003, 0.09132360789979399, 0.09238218584840571, 0.006754380911546089],
    [0.8162942062518003, 0.09238218584840571, 0.09132360789979399, 0.006754380911546089],
    [0.04623939674905287, 0.40857391844752045, 0.5451866848034267, 0.005870829621131629],
    [0.04623939674905287, 0.5451866848034267, 0.40857391844752045, 0.005870829621131629],
    [0.40857391844752045, 0.04623939674905287, 0.5451866848034267, 0.005870829621131629],
    [0.40857391844752045, 0.5451866848034267, 0.04623939674905287, 0.005870829621131629],
    [0.5451866848034267, 0.04623939674905287, 0.40857391844752045, 0.005870829621131629],
    [0.5451866848034267, 0.40857391844752045, 0.04623939674905287, 0.005870829621131629],
    [0.11710558017937019, 0.1697191769650604, 0.7131752428555694, 0.0054933681040341305],
    [0.11710558017937019, 0.7131752428555694, 0.1697191769650604, 0.0054933681040341305],
    [0.1697191769650604, 0.11710558017937019, 0.7131752428555694, 0.0054933681040341305],
    [0.1697191769650604, 0.7131752428555694, 0.11710558017937019, 0.0054933681040341305],
    [0.7131752428555694, 0.11710558017937019, 0.1697191769650604, 0.0054933681040341305],
    [0.7131752428555694, 0.1697191769650604, 0.11710558017937019, 0.0054933681040341305],
    [0.017779915147363434, 0.4010234473678232, 0.5811966374848134, 0.005385951426132789],
    [0.017779915147363434, 0.5811966374848134, 0.4010234473678232, 0.005385951426132789],
    [0.4010234473678232, 0.017779915147363434, 0.5811966374848134, 0.005385951426132789],
    [0.4010234473678232, 0.5811966374848134, 0.017779915147363434, 0.005385951426132789],
    [0.5811966374848134, 0.017779915147363434, 0.4010234473678232, 0.005385951426132789],
    [0.5811966374848134, 0.4010234473678232, 0.017779915147363434, 0.005385951426132789],
    [0.06804452564932609, 0.21878023149510448, 0.7131752428555694, 0.004751538837597584],
    [0.06804452564932609, 0.7131752428555694, 0.21878023149510448, 0.004751538837597584],
    [0.21878023149510448, 0.06804452564932609, 0.7131752428555694, 0.004751538837597584],
    [0.21878023149510448, 0.7131752428555694, 0.06804452564932609, 0.004751538837597584],
    [0.7131752428555694, 0.06804452564932609, 0.21878023149510448, 0.004751538837597584],
    [0.7131752428555694, 0.21878023149510448, 0.06804452564932609, 0.004751538837597584],
    [0.017779915147363434, 0.23301579829590466, 0.7492042865567319, 0.004658627802475229],
    [0.017779915147363434, 0.7492042865567319, 0.23301579829590466, 0.004658627802475229],
    [0.23301579829590466, 0.017779915147363434, 0.7492042865567319, 0.004658627802475229],
    [0.23301579829590466, 0.7492042865567319, 0.017779915147363434, 0.004658627802475229],
    [0.7492042865567319, 0.017779915147363434, 0.23301579829590466, 0.004658627802475229],
    [0.7492042865567319, 0.23301579829590466, 0.017779915147363434, 0.004658627802475229],
    [0.01559996151593426, 0.21430847939563075, 0.7700915590884351, 0.003796265801538844],
    [0.01559996151593426, 0.7700915590884351, 0.21430847939563075, 0.003796265801538844],
    [0.21430847939563075, 0.01559996151593426, 0.7700915590884351, 0.003796265801538844],
    [0.21430847939563075, 0.7700915590884351, 0.01559996151593426, 0.003796265801538844],
    [0.7700915590884351, 0.01559996151593426, 0.21430847939563075, 0.003796265801538844],
    [0.7700915590884351, 0.21430847939563075, 0.01559996151593426, 0.003796265801538844],
    [0.012470331936840044, 0.3719321645832723, 0.6155975034798877, 0.003578339657719554],
    [0.012470331936840044, 0.6155975034798877, 0.3719321645832723, 0.003578339657719554],
    [0.3719321645832723, 0.012470331936840044, 0.6155975034798877, 0.003578339657719554],
    [0.3719321645832723, 0.6155975034798877, 0.012470331936840044, 0.003578339657719554],
    [0.6155975034798877, 0.012470331936840044, 0.3719321645832723, 0.003578339657719554],
    [0.6155975034798877, 0.3719321645832723, 0.012470331936840044, 0.003578339657719554],
    [0.02916054411757905, 0.2576642130268515, 0.7131752428555694, 0.003368280958770779],
    [0.02916054411757905, 0.7131752428555694, 0.2576642130268515, 0.003368280958770779],
    [0.2576642130268515, 0.02916054411757905, 0.7131752428555694, 0.003368280958770779],
    [0.2576642130268515, 0.7131752428555694, 0.02916054411757905, 0.003368280958770779],
    [0.7131752428555694, 0.02916054411757905, 0.2576642130268515, 0.003368280958770779],
    [0.7131752428555694, 0.2576642130268515, 0.02916054411757905, 0.003368280958770779],
    [0.017779915147363434, 0.09985913490408653, 0.8823609499485501, 0.003302417986550911],
    [0.017779915147363434, 0.8823609499485501, 0.09985913490408653, 0.003302417986550911],
    [0.09985913490408653, 0.017779915147363434, 0.8823609499485501, 0.003302417986550911],
    [0.09985913490408653, 0.8823609499485501, 0.017779915147363434, 0.003302417986550911],
    [0.8823609499485501, 0.017779915147363434, 0.09985913490408653, 0.003302417986550911],
    [0.8823609499485501, 0.09985913490408653, 0.017779915147363434, 0.003302417986550911],
    [0.018041834963800133, 0.09132360789979399, 0.8906345571364058, 0.003074615130306118],
    [0.018041834963800133, 0.8906345571364058, 0.09132360789979399, 0.003074615130306118],
    [0.09132360789979399, 0.018041834963800133, 0.8906345571364058, 0.003074615130306118],
    [0.09132360789979399, 0.8906345571364058, 0.018041834963800133, 0.003074615130306118],
    [0.8906345571364058, 0.018041834963800133, 0.09132360789979399, 0.003074615130306118],
    [0.8906345571364058, 0.09132360789979399, 0.018041834963800133, 0.003074615130306118],
    [0.009030351006643619, 0.4457829641899297, 0.5451866848034267, 0.002672419843797178],
    [0.009030351006643619, 0.5451866848034267, 0.4457829641899297, 0.002672419843797178],
    [0.4457829641899297, 0.009030351006643619, 0.5451866848034267, 0.002672419843797178],
    [0.4457829641899297, 0.5451866848034267, 0.009030351006643619, 0.002672419843797178],
    [0.5451866848034267, 0.009030351006643619, 0.4457829641899297, 0.002672419843797178],
    [0.5451866848034267, 0.4457829641899297, 0.009030351006643619, 0.002672419843797178],
    [0.05894224214659225, 0.08542401489555332, 0.8556337429578544, 0.0021571104805749677],
    [0.05894224214659225, 0.8556337429578544, 0.08542401489555332, 0.0021571104805749677],
    [0.08542401489555332, 0.05894224214659225, 0.8556337429578544, 0.0021571104805749677],
    [0.08542401489555332, 0.8556337429578544, 0.05894224214659225, 0.0021571104805749677],
    [0.8556337429578544, 0.05894224214659225, 0.08542401489555332, 0.0021571104805749677],
    [0.8556337429578544, 0.08542401489555332, 0.05894224214659225, 0.0021571104805749677],
    [0.034248555034093305, 0.11011770200805227, 0.8556337429578544, 0.001865812381645027],
    [0.034248555034093305, 0.8556337429578544, 0.11011770200805227, 0.001865812381645027],
    [0.11011770200805227, 0.034248555034093305, 0.8556337429578544, 0.001865812381645027],
    [0.11011770200805227, 0.8556337429578544, 0.034248555034093305, 0.001865812381645027],
    [0.8556337429578544, 0.034248555034093305, 0.11011770200805227, 0.001865812381645027],
    [0.8556337429578544, 0.11011770200805227, 0.034248555034093305, 0.001865812381645027],
    [0.005694926133132337, 0.28112983101129824, 0.7131752428555694, 0.0015332519344971455],
    [0.005694926133132337, 0.7131752428555694, 0.28112983101129824, 0.0015332519344971455],
    [0.28112983101129824, 0.005694926133132337, 0.7131752428555694, 0.0015332519344971455],
    [0.28112983101129824, 0.7131752428555694, 0.005694926133132337, 0.0015332519344971455],
    [0.7131752428555694, 0.005694926133132337, 0.28112983101129824, 0.0015332519344971455],
    [0.7131752428555694, 0.28112983101129824, 0.005694926133132337, 0.0015332519344971455],
    [0.017779915147363434, 0.019502050260250196, 0.9627180345923864, 0.0015032709053597493],
    [0.017779915147363434, 0.9627180345923864, 0.019502050260250196, 0.0015032709053597493],
    [0.019502050260250196, 0.017779915147363434, 0.9627180345923864, 0.0015032709053597493],
    [0.019502050260250196, 0.9627180345923864, 0.017779915147363434, 0.0015032709053597493],
    [0.9627180345923864, 0.017779915147363434, 0.019502050260250196, 0.0015032709053597493],
    [0.9627180345923864, 0.019502050260250196, 0.017779915147363434, 0.0015032709053597493],
    [0.014677249793494638, 0.12968900724865093, 0.8556337429578544, 0.001322641050096359],
    [0.014677249793494638, 0.8556337429578544, 0.12968900724865093, 0.001322641050096359],
    [0.12968900724865093, 0.014677249793494638, 0.8556337429578544, 0.001322641050096359],
    [0.12968900724865093, 0.8556337429578544, 0.014677249793494638, 0.001322641050096359],
    [0.8556337429578544, 0.014677249793494638, 0.12968900724865093, 0.001322641050096359],
    [0.8556337429578544, 0.12968900724865093, 0.014677249793494638, 0.001322641050096359],
    [0.0028664023920285894, 0.14149985465011697, 0.8556337429578544, 0.0006020703063457201],
    [0.0028664023920285894, 0.8556337429578544, 0.14149985465011697, 0.0006020703063457201],
    [0.14149985465011697, 0.0028664023920285894, 0.8556337429578544, 0.0006020703063457201],
    [0.14149985465011697, 0.8556337429578544, 0.0028664023920285894, 0.0006020703063457201],
    [0.8556337429578544, 0.0028664023920285894, 0.14149985465011697, 0.0006020703063457201],
    [0.8556337429578544, 0.14149985465011697, 0.0028664023920285894, 0.0006020703063457201],
    [0.0182232708290937, 0.02641068446087613, 0.9553660447100302, 0.00039837083307692764],
    [0.0182232708290937, 0.9553660447100302, 0.02641068446087613, 0.00039837083307692764],
    [0.02641068446087613, 0.0182232708290937, 0.9553660447100302, 0.00039837083307692764],
    [0.02641068446087613, 0.9553660447100302, 0.0182232708290937, 0.00039837083307692764],
    [0.9553660447100302, 0.0182232708290937, 0.02641068446087613, 0.00039837083307692764],
    [0.9553660447100302, 0.02641068446087613, 0.0182232708290937, 0.00039837083307692764],
    [0.010588682601167153, 0.034045272688802676, 0.9553660447100302, 0.0003445744849577925],
    [0.010588682601167153, 0.9553660447100302, 0.034045272688802676, 0.0003445744849577925],
    [0.034045272688802676, 0.010588682601167153, 0.9553660447100302, 0.0003445744849577925],
    [0.034045272688802676, 0.9553660447100302, 0.010588682601167153, 0.0003445744849577925],
    [0.9553660447100302, 0.010588682601167153, 0.034045272688802676, 0.0003445744849577925],
    [0.9553660447100302, 0.034045272688802676, 0.010588682601167153, 0.0003445744849577925],
    [0.004537789678036128, 0.0400961656119337, 0.9553660447100302, 0.00024426269388306236],
    [0.004537789678036128, 0.9553660447100302, 0.0400961656119337, 0.00024426269388306236],
    [0.0400961656119337, 0.004537789678036128, 0.9553660447100302, 0.00024426269388306236],
    [0.0400961656119337, 0.9553660447100302, 0.004537789678036128, 0.00024426269388306236],
    [0.9553660447100302, 0.004537789678036128, 0.0400961656119337, 0.00024426269388306236],
    [0.9553660447100302, 0.0400961656119337, 0.004537789678036128, 0.00024426269388306236],
    [0.0008862103848236281, 0.0437477449051462, 0.9553660447100302, 0.00011118913549847263],
    [0.0008862103848236281, 0.9553660447100302, 0.0437477449051462, 0.00011118913549847263],
    [0.0437477449051462, 0.0008862103848236281, 0.9553660447100302, 0.00011118913549847263],
    [0.0437477449051462, 0.9553660447100302, 0.0008862103848236281, 0.00011118913549847263],
    [0.9553660447100302, 0.0008862103848236281, 0.0437477449051462, 0.00011118913549847263],
    [0.9553660447100302, 0.0437477449051462, 0.0008862103848236281, 0.00011118913549847263],
];

pub(crate) static RULE_D15: [[f64; 4]; 243] = [
    [0.3096675799276378, 0.3451662100361811, 0.3451662100361811, 0.011041972149654146],
    [0.3451662100361811, 0.3096675799276378, 0.3451662100361811, 0.011041972149654146],
    [0.3451662100361811, 0.3451662100361811, 0.3096675799276378, 0.011041972149654146],
    [0.17611665616299532, 0.41194167191850234, 0.41194167191850234, 0.01084657315361865],
    [0.41194167191850234, 0.17611665616299532, 0.41194167191850234, 0.01084657315361865],
    [0.41194167191850234, 0.41194167191850234, 0.17611665616299532, 0.01084657315361865],
    [0.23324488478863123, 0.3096675799276378, 0.4570875352837309, 0.010443721117637335],
    [0.23324488478863123, 0.4570875352837309, 0.3096675799276378, 0.010443721117637335],
    [0.3096675799276378, 0.23324488478863123, 0.4570875352837309, 0.010443721117637335],
    [0.3096675799276378, 0.4570875352837309, 0.23324488478863123, 0.010443721117637335],
    [0.4570875352837309, 0.23324488478863123, 0.3096675799276378, 0.010443721117637335],
    [0.4570875352837309, 0.3096675799276378, 0.23324488478863123, 0.010443721117637335],
    [0.17611665616299532, 0.27836817455623925, 0.5455151692807654, 0.010258908785781841],
    [0.17611665616299532, 0.5455151692807654, 0.27836817455623925, 0.010258908785781841],
    [0.27836817455623925, 0.17611665616299532, 0.5455151692807654, 0.010258908785781841],
    [0.27836817455623925, 0.5455151692807654, 0.17611665616299532, 0.010258908785781841],
    [0.5455151692807654, 0.17611665616299532, 0.27836817455623925, 0.010258908785781841],
    [0.5455151692807654, 0.27836817455623925, 0.17611665616299532, 0.010258908785781841],
    [0.2690147994594945, 0.2690147994594945, 0.46197040108101095, 0.009286145931685074],
    [0.2690147994594945, 0.46197040108101095, 0.2690147994594945, 0.009286145931685074],
    [0.46197040108101095, 0.2690147994594945, 0.2690147994594945, 0.009286145931685074],
    [0.1817858297884643, 0.35624376913052475, 0.46197040108101095, 0.008783025084086913],
    [0.1817858297884643, 0.46197040108101095, 0.35624376913052475, 0.008783025084086913],
    [0.35624376913052475, 0.1817858297884643, 0.46197040108101095, 0.008783025084086913],
    [0.35624376913052475, 0.46197040108101095, 0.1817858297884643, 0.008783025084086913],
    [0.46197040108101095, 0.1817858297884643, 0.35624376913052475, 0.008783025084086913],
    [0.46197040108101095, 0.35624376913052475, 0.1817858297884643, 0.008783025084086913],
    [0.1334511172664558, 0.3096675799276378, 0.5568813028059063, 0.00871384953974432],
    [0.1334511172664558, 0.5568813028059063, 0.3096675799276378, 0.00871384953974432],
    [0.3096675799276378, 0.1334511172664558, 0.5568813028059063, 0.00871384953974432],
    [0.3096675799276378, 0.5568813028059063, 0.1334511172664558, 0.00871384953974432],
    [0.5568813028059063, 0.1334511172664558, 0.3096675799276378, 0.00871384953974432],
    [0.5568813028059063, 0.3096675799276378, 0.1334511172664558, 0.00871384953974432],
    [0.15926841842477402, 0.17611665616299532, 0.6646149254122307, 0.008559649055574133],
    [0.15926841842477402, 0.6646149254122307, 0.17611665616299532, 0.008559649055574133],
    [0.17611665616299532, 0.15926841842477402, 0.6646149254122307, 0.008559649055574133],
    [0.17611665616299532, 0.6646149254122307, 0.15926841842477402, 0.008559649055574133],
    [0.6646149254122307, 0.15926841842477402, 0.17611665616299532, 0.008559649055574133],
    [0.6646149254122307, 0.17611665616299532, 0.15926841842477402, 0.008559649055574133],
    [0.07438738970919612, 0.46280630514540194, 0.46280630514540194, 0.008374237646499782],
    [0.46280630514540194, 0.07438738970919612, 0.46280630514540194, 0.008374237646499782],
    [0.46280630514540194, 0.46280630514540194, 0.07438738970919612, 0.008374237646499782],
    [0.07438738970919612, 0.3127397763291375, 0.6128728339616664, 0.007920523740462678],
    [0.07438738970919612, 0.6128728339616664, 0.3127397763291375, 0.007920523740462678],
    [0.3127397763291375, 0.07438738970919612, 0.6128728339616664, 0.007920523740462678],
    [0.3127397763291375, 0.6128728339616664, 0.07438738970919612, 0.007920523740462678],
    [0.6128728339616664, 0.07438738970919612, 0.3127397763291375, 0.007920523740462678],
    [0.6128728339616664, 0.3127397763291375, 0.07438738970919612, 0.007920523740462678],
    [0.10400880649736237, 0.43402079242162667, 0.46197040108101095, 0.007328227001129238],
    [0.10400880649736237, 0.46197040108101095, 0.43402079242162667, 0.007328227001129238],
    [0.43402079242162667, 0.10400880649736237, 0.46197040108101095, 0.007328227001129238],
    [0.43402079242162667, 0.46197040108101095, 0.10400880649736237, 0.007328227001129238],
    [0.46197040108101095, 0.10400880649736237, 0.43402079242162667, 0.007328227001129238],
    [0.46197040108101095, 0.43402079242162667, 0.10400880649736237, 0.007328227001129238],
    [0.07438738970919612, 0.17893413869550015, 0.7466784715953038, 0.006608588200790498],
    [0.07438738970919612, 0.7466784715953038, 0.17893413869550015, 0.006608588200790498],
    [0.17893413869550015, 0.07438738970919612, 0.7466784715953038, 0.006608588200790498],
    [0.17893413869550015, 0.7466784715953038, 0.07438738970919612, 0.006608588200790498],
    [0.7466784715953038, 0.07438738970919612, 0.17893413869550015, 0.006608588200790498],
    [0.7466784715953038, 0.17893413869550015, 0.07438738970919612, 0.006608588200790498],
    [0.190941382652353, 0.190941382652353, 0.618117234695294, 0.006428791021859326],
    [0.190941382652353, 0.618117234695294, 0.190941382652353, 0.006428791021859326],
    [0.618117234695294, 0.190941382652353, 0.190941382652353, 0.006428791021859326],
    [0.12902798565787088, 0.2528547796468351, 0.618117234695294, 0.0060804808820290775],
    [0.12902798565787088, 0.618117234695294, 0.2528547796468351, 0.0060804808820290775],
    [0.2528547796468351, 0.12902798565787088, 0.618117234695294, 0.0060804808820290775],
    [0.2528547796468351, 0.618117234695294, 0.12902798565787088, 0.0060804808820290775],
    [0.618117234695294, 0.12902798565787088, 0.2528547796468351, 0.0060804808820290775],
    [0.618117234695294, 0.2528547796468351, 0.12902798565787088, 0.0060804808820290775],
    [0.05659652124789447, 0.3096675799276378, 0.6337358988244677, 0.006040200627424463],
    [0.05659652124789447, 0.6337358988244677, 0.3096675799276378, 0.006040200627424463],
    [0.3096675799276378, 0.05659652124789447, 0.6337358988244677, 0.006040200627424463],
    [0.3096675799276378, 0.6337358988244677, 0.05659652124789447, 0.006040200627424463],
    [0.6337358988244677, 0.05659652124789447, 0.3096675799276378, 0.006040200627424463],
    [0.6337358988244677, 0.3096675799276378, 0.05659652124789447, 0.006040200627424463],
    [0.06754561979049113, 0.17611665616299532, 0.7563377240465136, 0.005933313096605192],
    [0.06754561979049113, 0.7563377240465136, 0.17611665616299532, 0.005933313096605192],
    [0.17611665616299532, 0.06754561979049113, 0.7563377240465136, 0.005933313096605192],
    [0.17611665616299532, 0.7563377240465136, 0.06754561979049113, 0.005933313096605192],
    [0.7563377240465136, 0.06754561979049113, 0.17611665616299532, 0.005933313096605192],
    [0.7563377240465136, 0.17611665616299532, 0.06754561979049113, 0.005933313096605192],
    [0.04411005878012046, 0.46197040108101095, 0.4939195401388686, 0.0050797252268632255],
    [0.04411005878012046, 0.4939195401388686, 0.46197040108101095, 0.0050797252268632255],
    [0.46197040108101095, 0.04411005878012046, 0.4939195401388686, 0.0050797252268632255],
    [0.46197040108101095, 0.4939195401388686, 0.04411005878012046, 0.0050797252268632255],
    [0.4939195401388686, 0.04411005878012046, 0.46197040108101095, 0.0050797252268632255],
    [0.4939195401388686, 0.46197040108101095, 0.04411005878012046, 0.0050797252268632255],
    [0.0738233932130476, 0.3080593720916584, 0.618117234695294, 0.00507332539221229],
    [0.0738233932130476, 0.618117234695294, 0.3080593720916584, 0.00507332539221229],
    [0.3080593720916584, 0.0738233932130476, 0.618117234695294, 0.00507332539221229],
    [0.3080593720916584, 0.618117234695294, 0.0738233932130476, 0.00507332539221229],
    [0.618117234695294, 0.0738233932130476, 0.3080593720916584, 0.00507332539221229],
    [0.618117234695294, 0.3080593720916584, 0.0738233932130476, 0.00507332539221229],
    [0.07438738970919612, 0.07588583737694267, 0.8497267729138612, 0.004580891420575978],
    [0.07438738970919612, 0.8497267729138612, 0.07588583737694267, 0.004580891420575978],
    [0.07588583737694267, 0.07438738970919612, 0.8497267729138612, 0.004580891420575978],
    [0.07588583737694267, 0.8497267729138612, 0.07438738970919612, 0.004580891420575978],
    [0.8497267729138612, 0.07438738970919612, 0.07588583737694267, 0.004580891420575978],
    [0.8497267729138612, 0.07588583737694267, 0.07438738970919612, 0.004580891420575978],
    [0.014412409648876467, 0.49279379517556177, 0.49279379517556177, 0.003993474828086982],
    [0.49279379517556177, 0.014412409648876467, 0.49279379517556177, 0.003993474828086982],
    [0.49279379517556177, 0.49279379517556177, 0.014412409648876467, 0.003993474828086982],
    [0.014412409648876467, 0.33300372005773043, 0.652583870293393, 0.0037771094537809974],
    [0.014412409648876467, 0.652583870293393, 0.33300372005773043, 0.0037771094537809974],
    [0.33300372005773043, 0.014412409648876467, 0.652583870293393, 0.0037771094537809974],
    [0.33300372005773043, 0.652583870293393, 0.014412409648876467, 0.0037771094537809974],
    [0.652583870293393, 0.014412409648876467, 0.33300372005773043, 0.0037771094537809974],
    [0.652583870293393, 0.33300372005773043, 0.014412409648876467, 0.0037771094537809974],
    [0.03130844707902744, 0.3505743182256785, 0.618117234695294, 0.003516689504150916],
    [0.03130844707902744, 0.618117234695294, 0.3505743182256785, 0.003516689504150916],
    [0.3505743182256785, 0.03130844707902744, 0.618117234695294, 0.003516689504150916],
    [0.3505743182256785, 0.618117234695294, 0.03130844707902744, 0.003516689504150916],
    [0.618117234695294, 0.03130844707902744, 0.3505743182256785, 0.003516689504150916],
    [0.618117234695294, 0.3505743182256785, 0.03130844707902744, 0.003516689504150916],
    [0.11858849240748015, 0.11858849240748015, 0.7628230151850397, 0.0035010679117119634],
    [0.11858849240748015, 0.7628230151850397, 0.11858849240748015, 0.0035010679117119634],
    [0.7628230151850397, 0.11858849240748015, 0.11858849240748015, 0.0035010679117119634],
    [0.08013576776805811, 0.1570412170469022, 0.7628230151850397, 0.0033113810095032653],
    [0.08013576776805811, 0.7628230151850397, 0.1570412170469022, 0.0033113810095032653],
    [0.1570412170469022, 0.08013576776805811, 0.7628230151850397, 0.0033113810095032653],
    [0.1570412170469022, 0.7628230151850397, 0.08013576776805811, 0.0033113810095032653],
    [0.7628230151850397, 0.08013576776805811, 0.1570412170469022, 0.0033113810095032653],
    [0.7628230151850397, 0.1570412170469022, 0.08013576776805811, 0.0033113810095032653],
    [0.014412409648876467, 0.19052815900276618, 0.7950594313483573, 0.0031514785874365956],
    [0.014412409648876467, 0.7950594313483573, 0.19052815900276618, 0.0031514785874365956],
    [0.19052815900276618, 0.014412409648876467, 0.7950594313483573, 0.0031514785874365956],
    [0.19052815900276618, 0.7950594313483573, 0.014412409648876467, 0.0031514785874365956],
    [0.7950594313483573, 0.014412409648876467, 0.19052815900276618, 0.0031514785874365956],
    [0.7950594313483573, 0.19052815900276618, 0.014412409648876467, 0.0031514785874365956],
    [0.04584969891770097, 0.19132728589725934, 0.7628230151850397, 0.0027628922259182163],
    [0.04584969891770097, 0.7628230151850397, 0.19132728589725934, 0.0027628922259182163],
    [0.19132728589725934, 0.04584969891770097, 0.7628230151850397, 0.0027628922259182163],
    [0.19132728589725934, 0.7628230151850397, 0.04584969891770097, 0.0027628922259182163],
    [0.7628230151850397, 0.04584969891770097, 0.19132728589725934, 0.0027628922259182163],
    [0.7628230151850397, 0.19132728589725934, 0.04584969891770097, 0.0027628922259182163],
    [0.010990009457612434, 0.3096675799276378, 0.6793424106147498, 0.0027175123714896425],
    [0.010990009457612434, 0.6793424106147498, 0.3096675799276378, 0.0027175123714896425],
    [0.3096675799276378, 0.010990009457612434, 0.6793424106147498, 0.0027175123714896425],
    [0.3096675799276378, 0.6793424106147498, 0.010990009457612434, 0.0027175123714896425],
    [0.6793424106147498, 0.010990009457612434, 0.3096675799276378, 0.0027175123714896425],
    [0.6793424106147498, 0.3096675799276378, 0.010990009457612434, 0.0027175123714896425],
    [0.013116124170713188, 0.17611665616299532, 0.8107672196662915, 0.0026694232093448403],
    [0.013116124170713188, 0.8107672196662915, 0.17611665616299532, 0.0026694232093448403],
    [0.17611665616299532, 0.013116124170713188, 0.8107672196662915, 0.0026694232093448403],
    [0.17611665616299532, 0.8107672196662915, 0.013116124170713188, 0.0026694232093448403],
    [0.8107672196662915, 0.013116124170713188, 0.17611665616299532, 0.0026694232093448403],
    [0.8107672196662915, 0.17611665616299532, 0.013116124170713188, 0.0026694232093448403],
    [0.008565366783694305, 0.46197040108101095, 0.5294642321352947, 0.0022853903370515937],
    [0.008565366783694305, 0.5294642321352947, 0.46197040108101095, 0.0022853903370515937],
    [0.46197040108101095, 0.008565366783694305, 0.5294642321352947, 0.0022853903370515937],
    [0.46197040108101095, 0.5294642321352947, 0.008565366783694305, 0.0022853903370515937],
    [0.5294642321352947, 0.008565366783694305, 0.46197040108101095, 0.0022853903370515937],
    [0.5294642321352947, 0.46197040108101095, 0.008565366783694305, 0.0022853903370515937],
    [0.014412409648876467, 0.08080285291124152, 0.904784737439882, 0.0021845182033872743],
    [0.014412409648876467, 0.904784737439882, 0.08080285291124152, 0.0021845182033872743],
    [0.08080285291124152, 0.014412409648876467, 0.904784737439882, 0.0021845182033872743],
    [0.08080285291124152, 0.904784737439882, 0.014412409648876467, 0.0021845182033872743],
    [0.904784737439882, 0.014412409648876467, 0.08080285291124152, 0.0021845182033872743],
    [0.904784737439882, 0.08080285291124152, 0.014412409648876467, 0.0021845182033872743],
    [0.014735641910190115, 0.07438738970919612, 0.9108769683806137, 0.002060962851357152],
    [0.014735641910190115, 0.9108769683806137, 0.07438738970919612, 0.002060962851357152],
    [0.07438738970919612, 0.014735641910190115, 0.9108769683806137, 0.002060962851357152],
    [0.07438738970919612, 0.9108769683806137, 0.014735641910190115, 0.002060962851357152],
    [0.9108769683806137, 0.014735641910190115, 0.07438738970919612, 0.002060962851357152],
    [0.9108769683806137, 0.07438738970919612, 0.014735641910190115, 0.002060962851357152],
    [0.019444823783858183, 0.21773216103110213, 0.7628230151850397, 0.0019151608345290589],
    [0.019444823783858183, 0.7628230151850397, 0.21773216103110213, 0.0019151608345290589],
    [0.21773216103110213, 0.019444823783858183, 0.7628230151850397, 0.0019151608345290589],
    [0.21773216103110213, 0.7628230151850397, 0.019444823783858183, 0.0019151608345290589],
    [0.7628230151850397, 0.019444823783858183, 0.21773216103110213, 0.0019151608345290589],
    [0.7628230151850397, 0.21773216103110213, 0.019444823783858183, 0.0019151608345290589],
    [0.006079527891733639, 0.37580323741297234, 0.618117234695294, 0.0015821738090664773],
    [0.006079527891733639, 0.618117234695294, 0.37580323741297234, 0.0015821738090664773],
    [0.37580323741297234, 0.006079527891733639, 0.618117234695294, 0.0015821738090664773],
    [0.37580323741297234, 0.618117234695294, 0.006079527891733639, 0.0015821738090664773],
    [0.618117234695294, 0.006079527891733639, 0.37580323741297234, 0.0015821738090664773],
    [0.618117234695294, 0.37580323741297234, 0.006079527891733639, 0.0015821738090664773],
    [0.05903948939499937, 0.05903948939499937, 0.8819210212100013, 0.001327562678773319],
    [0.05903948939499937, 0.8819210212100013, 0.05903948939499937, 0.001327562678773319],
    [0.8819210212100013, 0.05903948939499937, 0.05903948939499937, 0.001327562678773319],
    [0.039895732842657954, 0.07818324594734077, 0.8819210212100013, 0.0012556356958142094],
    [0.039895732842657954, 0.8819210212100013, 0.07818324594734077, 0.0012556356958142094],
    [0.07818324594734077, 0.039895732842657954, 0.8819210212100013, 0.0012556356958142094],
    [0.07818324594734077, 0.8819210212100013, 0.039895732842657954, 0.0012556356958142094],
    [0.8819210212100013, 0.039895732842657954, 0.07818324594734077, 0.0012556356958142094],
    [0.8819210212100013, 0.07818324594734077, 0.039895732842657954, 0.0012556356958142094],
    [0.022826353198877294, 0.09525262559112144, 0.8819210212100013, 0.0010476553717601034],
    [0.022826353198877294, 0.8819210212100013, 0.09525262559112144, 0.0010476553717601034],
    [0.09525262559112144, 0.022826353198877294, 0.8819210212100013, 0.0010476553717601034],
    [0.09525262559112144, 0.8819210212100013, 0.022826353198877294, 0.0010476553717601034],
    [0.8819210212100013, 0.022826353198877294, 0.09525262559112144, 0.0010476553717601034],
    [0.8819210212100013, 0.09525262559112144, 0.022826353198877294, 0.0010476553717601034],
    [0.014412409648876467, 0.015690436410517854, 0.9698971539406057, 0.0009828241824445067],
    [0.014412409648876467, 0.9698971539406057, 0.015690436410517854, 0.0009828241824445067],
    [0.015690436410517854, 0.014412409648876467, 0.9698971539406057, 0.0009828241824445067],
    [0.015690436410517854, 0.9698971539406057, 0.014412409648876467, 0.0009828241824445067],
    [0.9698971539406057, 0.014412409648876467, 0.015690436410517854, 0.0009828241824445067],
    [0.9698971539406057, 0.015690436410517854, 0.014412409648876467, 0.0009828241824445067],
    [0.0037758291954058704, 0.23340115561955443, 0.7628230151850397, 0.0008616391378781616],
    [0.0037758291954058704, 0.7628230151850397, 0.23340115561955443, 0.0008616391378781616],
    [0.23340115561955443, 0.0037758291954058704, 0.7628230151850397, 0.0008616391378781616],
    [0.23340115561955443, 0.7628230151850397, 0.0037758291954058704, 0.0008616391378781616],
    [0.7628230151850397, 0.0037758291954058704, 0.23340115561955443, 0.0008616391378781616],
    [0.7628230151850397, 0.23340115561955443, 0.0037758291954058704, 0.0008616391378781616],
    [0.009680639700098878, 0.10839833908989986, 0.8819210212100013, 0.0007262058640061926],
    [0.009680639700098878, 0.8819210212100013, 0.10839833908989986, 0.0007262058640061926],
    [0.10839833908989986, 0.009680639700098878, 0.8819210212100013, 0.0007262058640061926],
    [0.10839833908989986, 0.8819210212100013, 0.009680639700098878, 0.0007262058640061926],
    [0.8819210212100013, 0.009680639700098878, 0.10839833908989986, 0.0007262058640061926],
    [0.8819210212100013, 0.10839833908989986, 0.009680639700098878, 0.0007262058640061926],
    [0.0018798032019288295, 0.1161991755880699, 0.8819210212100013, 0.00032672315729463447],
    [0.0018798032019288295, 0.8819210212100013, 0.1161991755880699, 0.00032672315729463447],
    [0.1161991755880699, 0.0018798032019288295, 0.8819210212100013, 0.00032672315729463447],
    [0.1161991755880699, 0.8819210212100013, 0.0018798032019288295, 0.00032672315729463447],
    [0.8819210212100013, 0.0018798032019288295, 0.1161991755880699, 0.00032672315729463447],
    [0.8819210212100013, 0.1161991755880699, 0.0018798032019288295, 0.00032672315729463447],
    [0.018128906441604697, 0.018128906441604697, 0.9637421871167906, 0.00024006717832069862],
    [0.018128906441604697, 0.9637421871167906, 0.018128906441604697, 0.00024006717832069862],
    [0.9637421871167906, 0.018128906441604697, 0.018128906441604697, 0.00024006717832069862],
    [0.01225054646534701, 0.024007266417862383, 0.9637421871167906, 0.000227060404237482],
    [0.01225054646534701, 0.9637421871167906, 0.024007266417862383, 0.000227060404237482],
    [0.024007266417862383, 0.01225054646534701, 0.9637421871167906, 0.000227060404237482],
    [0.024007266417862383, 0.9637421871167906, 0.01225054646534701, 0.000227060404237482],
    [0.9637421871167906, 0.01225054646534701, 0.024007266417862383, 0.000227060404237482],
    [0.9637421871167906, 0.024007266417862383, 0.01225054646534701, 0.000227060404237482],
    [0.007009153124222663, 0.02924865975898673, 0.9637421871167906, 0.00018945069259054955],
    [0.007009153124222663, 0.9637421871167906, 0.02924865975898673, 0.00018945069259054955],
    [0.02924865975898673, 0.007009153124222663, 0.9637421871167906, 0.00018945069259054955],
    [0.02924865975898673, 0.9637421871167906, 0.007009153124222663, 0.00018945069259054955],
    [0.9637421871167906, 0.007009153124222663, 0.02924865975898673, 0.00018945069259054955],
    [0.9637421871167906, 0.02924865975898673, 0.007009153124222663, 0.00018945069259054955],
    [0.002972576714608942, 0.033285236168600456, 0.9637421871167906, 0.00013132200493388518],
    [0.002972576714608942, 0.9637421871167906, 0.033285236168600456, 0.00013132200493388518],
    [0.033285236168600456, 0.002972576714608942, 0.9637421871167906, 0.00013132200493388518],
    [0.033285236168600456, 0.9637421871167906, 0.002972576714608942, 0.00013132200493388518],
    [0.9637421871167906, 0.002972576714608942, 0.033285236168600456, 0.00013132200493388518],
    [0.9637421871167906, 0.033285236168600456, 0.002972576714608942, 0.00013132200493388518],
    [0.0005772200390893482, 0.03568059284412005, 0.9637421871167906, 5.9082337668777984e-05],
    [0.0005772200390893482, 0.9637421871167906, 0.03568059284412005, 5.9082337668777984e-05],
    [0.03568059284412005, 0.0005772200390893482, 0.9637421871167906, 5.9082337668777984e-05],
    [0.03568059284412005, 0.9637421871167906, 0.0005772200390893482, 5.9082337668777984e-05],
    [0.9637421871167906, 0.0005772200390893482, 0.03568059284412005, 5.9082337668777984e-05],
    [0.9637421871167906, 0.03568059284412005, 0.0005772200390893482, 5.9082337668777984e-05],
];

pub(crate) static RULE_D17: [[f64; 4]; 300] = [
    [0.26115967600845613, 0.3144229795721643, 0.42441734441937956, 0.009131392545858348],
    [0.26115967600845613, 0.42441734441937956, 0.3144229795721643, 0.009131392545858348],
    [0.3144229795721643, 0.26115967600845613, 0.42441734441937956, 0.009131392545858348],
    [0.3144229795721643, 0.42441734441937956, 0.26115967600845613, 0.009131392545858348],
    [0.42441734441937956, 0.26115967600845613, 0.3144229795721643, 0.009131392545858348],
    [0.42441734441937956, 0.3144229795721643, 0.26115967600845613, 0.009131392545858348],
    [0.14711144964307027, 0.3629576655987701, 0.4899308847581596, 0.00849250922653652],
    [0.14711144964307027, 0.4899308847581596, 0.3629576655987701, 0.00849250922653652],
    [0.3629576655987701, 0.14711144964307027, 0.4899308847581596, 0.00849250922653652],
    [0.3629576655987701, 0.4899308847581596, 0.14711144964307027, 0.00849250922653652],
    [0.4899308847581596, 0.14711144964307027, 0.3629576655987701, 0.00849250922653652],
    [0.4899308847581596, 0.3629576655987701, 0.14711144964307027, 0.00849250922653652],
    [0.25761878023675777, 0.3477413728774553, 0.3946398468857869, 0.008329558095167356],
    [0.25761878023675777, 0.3946398468857869, 0.3477413728774553, 0.008329558095167356],
    [0.3477413728774553, 0.25761878023675777, 0.3946398468857869, 0.008329558095167356],
    [0.3477413728774553, 0.3946398468857869, 0.25761878023675777, 0.008329558095167356],
    [0.3946398468857869, 0.25761878023675777, 0.3477413728774553, 0.008329558095167356],
    [0.3946398468857869, 0.3477413728774553, 0.25761878023675777, 0.008329558095167356],
    [0.209315165288324, 0.26115967600845613, 0.5295251587032199, 0.008320062816942699],
    [0.209315165288324, 0.5295251587032199, 0.26115967600845613, 0.008320062816942699],
    [0.26115967600845613, 0.209315165288324, 0.5295251587032199, 0.008320062816942699],
    [0.26115967600845613, 0.5295251587032199, 0.209315165288324, 0.008320062816942699],
    [0.5295251587032199, 0.209315165288324, 0.26115967600845613, 0.008320062816942699],
    [0.5295251587032199, 0.26115967600845613, 0.209315165288324, 0.008320062816942699],
    [0.14711144964307027, 0.24162529046333292, 0.6112632598935968, 0.007737944665438476],
    [0.14711144964307027, 0.6112632598935968, 0.24162529046333292, 0.007737944665438476],
    [0.24162529046333292, 0.14711144964307027, 0.6112632598935968, 0.007737944665438476],
    [0.24162529046333292, 0.6112632598935968, 0.14711144964307027, 0.007737944665438476],
    [0.6112632598935968, 0.14711144964307027, 0.24162529046333292, 0.007737944665438476],
    [0.6112632598935968, 0.24162529046333292, 0.14711144964307027, 0.007737944665438476],
    [0.17149992548256865, 0.3946398468857869, 0.43386022763164445, 0.007589471840261528],
    [0.17149992548256865, 0.43386022763164445, 0.3946398468857869, 0.007589471840261528],
    [0.3946398468857869, 0.17149992548256865, 0.43386022763164445, 0.007589471840261528],
    [0.3946398468857869, 0.43386022763164445, 0.17149992548256865, 0.007589471840261528],
    [0.43386022763164445, 0.17149992548256865, 0.3946398468857869, 0.007589471840261528],
    [0.43386022763164445, 0.3946398468857869, 0.17149992548256865, 0.007589471840261528],
    [0.11843256921326885, 0.26115967600845613, 0.620407754778275, 0.0067695417507943716],
    [0.11843256921326885, 0.620407754778275, 0.26115967600845613, 0.0067695417507943716],
    [0.26115967600845613, 0.11843256921326885, 0.620407754778275, 0.0067695417507943716],
    [0.26115967600845613, 0.620407754778275, 0.11843256921326885, 0.0067695417507943716],
    [0.620407754778275, 0.11843256921326885, 0.26115967600845613, 0.0067695417507943716],
    [0.620407754778275, 0.26115967600845613, 0.11843256921326885, 0.0067695417507943716],
    [0.1971467621272219, 0.2661144721571175, 0.5367387657156606, 0.006506761315294709],
    [0.1971467621272219, 0.5367387657156606, 0.2661144721571175, 0.006506761315294709],
    [0.2661144721571175, 0.1971467621272219, 0.5367387657156606, 0.006506761315294709],
    [0.2661144721571175, 0.5367387657156606, 0.1971467621272219, 0.006506761315294709],
    [0.5367387657156606, 0.1971467621272219, 0.2661144721571175, 0.006506761315294709],
    [0.5367387657156606, 0.2661144721571175, 0.1971467621272219, 0.006506761315294709],
    [0.06173207187714813, 0.39929195526794886, 0.5389759728549031, 0.0063328038318047385],
    [0.06173207187714813, 0.5389759728549031, 0.39929195526794886, 0.0063328038318047385],
    [0.39929195526794886, 0.06173207187714813, 0.5389759728549031, 0.0063328038318047385],
    [0.39929195526794886, 0.5389759728549031, 0.06173207187714813, 0.0063328038318047385],
    [0.5389759728549031, 0.06173207187714813, 0.39929195526794886, 0.0063328038318047385],
    [0.5389759728549031, 0.39929195526794886, 0.06173207187714813, 0.0063328038318047385],
    [0.13671395427587366, 0.14711144964307027, 0.716174596081056, 0.0062959067293762135],
    [0.13671395427587366, 0.716174596081056, 0.14711144964307027, 0.0062959067293762135],
    [0.14711144964307027, 0.13671395427587366, 0.716174596081056, 0.0062959067293762135],
    [0.14711144964307027, 0.716174596081056, 0.13671395427587366, 0.0062959067293762135],
    [0.716174596081056, 0.13671395427587366, 0.14711144964307027, 0.0062959067293762135],
    [0.716174596081056, 0.14711144964307027, 0.13671395427587366, 0.0062959067293762135],
    [0.09703633641072712, 0.3946398468857869, 0.508323816703486, 0.006175103195676083],
    [0.09703633641072712, 0.508323816703486, 0.3946398468857869, 0.006175103195676083],
    [0.3946398468857869, 0.09703633641072712, 0.508323816703486, 0.006175103195676083],
    [0.3946398468857869, 0.508323816703486, 0.09703633641072712, 0.006175103195676083],
    [0.508323816703486, 0.09703633641072712, 0.3946398468857869, 0.006175103195676083],
    [0.508323816703486, 0.3946398468857869, 0.09703633641072712, 0.006175103195676083],
    [0.1312429745334383, 0.3320182597509011, 0.5367387657156606, 0.005928631652426222],
    [0.1312429745334383, 0.5367387657156606, 0.3320182597509011, 0.005928631652426222],
    [0.3320182597509011, 0.1312429745334383, 0.5367387657156606, 0.005928631652426222],
    [0.3320182597509011, 0.5367387657156606, 0.1312429745334383, 0.005928631652426222],
    [0.5367387657156606, 0.1312429745334383, 0.3320182597509011, 0.005928631652426222],
    [0.5367387657156606, 0.3320182597509011, 0.1312429745334383, 0.005928631652426222],
    [0.06173207187714813, 0.26581346480760815, 0.6724544633152437, 0.005770130396145187],
    [0.06173207187714813, 0.6724544633152437, 0.26581346480760815, 0.005770130396145187],
    [0.26581346480760815, 0.06173207187714813, 0.6724544633152437, 0.005770130396145187],
    [0.26581346480760815, 0.6724544633152437, 0.06173207187714813, 0.005770130396145187],
    [0.6724544633152437, 0.06173207187714813, 0.26581346480760815, 0.005770130396145187],
    [0.6724544633152437, 0.26581346480760815, 0.06173207187714813, 0.005770130396145187],
    [0.07425855954477158, 0.38900267473956784, 0.5367387657156606, 0.004823776019389247],
    [0.07425855954477158, 0.5367387657156606, 0.38900267473956784, 0.004823776019389247],
    [0.38900267473956784, 0.07425855954477158, 0.5367387657156606, 0.004823776019389247],
    [0.38900267473956784, 0.5367387657156606, 0.07425855954477158, 0.004823776019389247],
    [0.5367387657156606, 0.07425855954477158, 0.38900267473956784, 0.004823776019389247],
    [0.5367387657156606, 0.38900267473956784, 0.07425855954477158, 0.004823776019389247],
    [0.06173207187714813, 0.1503998600640425, 0.7878680680588094, 0.00469481294596595],
    [0.06173207187714813, 0.7878680680588094, 0.1503998600640425, 0.00469481294596595],
    [0.1503998600640425, 0.06173207187714813, 0.7878680680588094, 0.00469481294596595],
    [0.1503998600640425, 0.7878680680588094, 0.06173207187714813, 0.00469481294596595],
    [0.7878680680588094, 0.06173207187714813, 0.1503998600640425, 0.00469481294596595],
    [0.7878680680588094, 0.1503998600640425, 0.06173207187714813, 0.00469481294596595],
    [0.04984831293691941, 0.26115967600845613, 0.6889920110546245, 0.004617891940734547],
    [0.04984831293691941, 0.6889920110546245, 0.26115967600845613, 0.004617891940734547],
    [0.26115967600845613, 0.04984831293691941, 0.6889920110546245, 0.004617891940734547],
    [0.26115967600845613, 0.6889920110546245, 0.04984831293691941, 0.004617891940734547],
    [0.6889920110546245, 0.04984831293691941, 0.26115967600845613, 0.004617891940734547],
    [0.6889920110546245, 0.26115967600845613, 0.04984831293691941, 0.004617891940734547],
    [0.057542954787338285, 0.14711144964307027, 0.7953455955695914, 0.004294798380081067],
    [0.057542954787338285, 0.7953455955695914, 0.14711144964307027, 0.004294798380081067],
    [0.14711144964307027, 0.057542954787338285, 0.7953455955695914, 0.004294798380081067],
    [0.14711144964307027, 0.7953455955695914, 0.057542954787338285, 0.004294798380081067],
    [0.7953455955695914, 0.057542954787338285, 0.14711144964307027, 0.004294798380081067],
    [0.7953455955695914, 0.14711144964307027, 0.057542954787338285, 0.004294798380081067],
    [0.1379059921310559, 0.186149546192279, 0.6759444616766651, 0.004275438247371822],
    [0.1379059921310559, 0.6759444616766651, 0.186149546192279, 0.004275438247371822],
    [0.186149546192279, 0.1379059921310559, 0.6759444616766651, 0.004275438247371822],
    [0.186149546192279, 0.6759444616766651, 0.1379059921310559, 0.004275438247371822],
    [0.6759444616766651, 0.1379059921310559, 0.186149546192279, 0.004275438247371822],
    [0.6759444616766651, 0.186149546192279, 0.1379059921310559, 0.004275438247371822],
    [0.040842630500936374, 0.3946398468857869, 0.5645175226132767, 0.004212391374522585],
    [0.040842630500936374, 0.5645175226132767, 0.3946398468857869, 0.004212391374522585],
    [0.3946398468857869, 0.040842630500936374, 0.5645175226132767, 0.004212391374522585],
    [0.3946398468857869, 0.5645175226132767, 0.040842630500936374, 0.004212391374522585],
    [0.5645175226132767, 0.040842630500936374, 0.3946398468857869, 0.004212391374522585],
    [0.5645175226132767, 0.3946398468857869, 0.040842630500936374, 0.004212391374522585],
    [0.09180568028596389, 0.232249858037371, 0.6759444616766651, 0.0038955629833509913],
    [0.09180568028596389, 0.6759444616766651, 0.232249858037371, 0.0038955629833509913],
    [0.232249858037371, 0.09180568028596389, 0.6759444616766651, 0.0038955629833509913],
    [0.232249858037371, 0.6759444616766651, 0.09180568028596389, 0.0038955629833509913],
    [0.6759444616766651, 0.09180568028596389, 0.232249858037371, 0.0038955629833509913],
    [0.6759444616766651, 0.232249858037371, 0.09180568028596389, 0.0038955629833509913],
    [0.031255455648917164, 0.4320057786354222, 0.5367387657156606, 0.0032905737528293164],
    [0.031255455648917164, 0.5367387657156606, 0.4320057786354222, 0.0032905737528293164],
    [0.4320057786354222, 0.031255455648917164, 0.5367387657156606, 0.0032905737528293164],
    [0.4320057786354222, 0.5367387657156606, 0.031255455648917164, 0.0032905737528293164],
    [0.5367387657156606, 0.031255455648917164, 0.4320057786354222, 0.0032905737528293164],
    [0.5367387657156606, 0.4320057786354222, 0.031255455648917164, 0.0032905737528293164],
    [0.06173207187714813, 0.06330335768229974, 0.8749645704405521, 0.003202600658144744],
    [0.06173207187714813, 0.8749645704405521, 0.06330335768229974, 0.003202600658144744],
    [0.06330335768229974, 0.06173207187714813, 0.8749645704405521, 0.003202600658144744],
    [0.06330335768229974, 0.8749645704405521, 0.06173207187714813, 0.003202600658144744],
    [0.8749645704405521, 0.06173207187714813, 0.06330335768229974, 0.003202600658144744],
    [0.8749645704405521, 0.06330335768229974, 0.06173207187714813, 0.003202600658144744],
    [0.051944552463084985, 0.2721109858602499, 0.6759444616766651, 0.00316958860033391],
    [0.051944552463084985, 0.6759444616766651, 0.2721109858602499, 0.00316958860033391],
    [0.2721109858602499, 0.051944552463084985, 0.6759444616766651, 0.00316958860033391],
    [0.2721109858602499, 0.6759444616766651, 0.051944552463084985, 0.00316958860033391],
    [0.6759444616766651, 0.051944552463084985, 0.2721109858602499, 0.00316958860033391],
    [0.6759444616766651, 0.2721109858602499, 0.051944552463084985, 0.00316958860033391],
    [0.011917613432415597, 0.42049113720397135, 0.567591249363613, 0.0029650445910329886],
    [0.011917613432415597, 0.567591249363613, 0.42049113720397135, 0.0029650445910329886],
    [0.42049113720397135, 0.011917613432415597, 0.567591249363613, 0.0029650445910329886],
    [0.42049113720397135, 0.567591249363613, 0.011917613432415597, 0.0029650445910329886],
    [0.567591249363613, 0.011917613432415597, 0.42049113720397135, 0.0029650445910329886],
    [0.567591249363613, 0.42049113720397135, 0.011917613432415597, 0.0029650445910329886],
    [0.011917613432415597, 0.2799260156044795, 0.7081563709631049, 0.00270159859282577],
    [0.011917613432415597, 0.7081563709631049, 0.2799260156044795, 0.00270159859282577],
    [0.2799260156044795, 0.011917613432415597, 0.7081563709631049, 0.00270159859282577],
    [0.2799260156044795, 0.7081563709631049, 0.011917613432415597, 0.00270159859282577],
    [0.7081563709631049, 0.011917613432415597, 0.2799260156044795, 0.00270159859282577],
    [0.7081563709631049, 0.2799260156044795, 0.011917613432415597, 0.00270159859282577],
    [0.08469597369452923, 0.11432510526857194, 0.8009789210368988, 0.0022434811608069345],
    [0.08469597369452923, 0.8009789210368988, 0.11432510526857194, 0.0022434811608069345],
    [0.11432510526857194, 0.08469597369452923, 0.8009789210368988, 0.0022434811608069345],
    [0.11432510526857194, 0.8009789210368988, 0.08469597369452923, 0.0022434811608069345],
    [0.8009789210368988, 0.08469597369452923, 0.11432510526857194, 0.0022434811608069345],
    [0.8009789210368988, 0.11432510526857194, 0.08469597369452923, 0.0022434811608069345],
    [0.011917613432415597, 0.15838487943291604, 0.8296975071346684, 0.00219813057550228],
    [0.011917613432415597, 0.8296975071346684, 0.15838487943291604, 0.00219813057550228],
    [0.15838487943291604, 0.011917613432415597, 0.8296975071346684, 0.00219813057550228],
    [0.15838487943291604, 0.8296975071346684, 0.011917613432415597, 0.00219813057550228],
    [0.8296975071346684, 0.011917613432415597, 0.15838487943291604, 0.00219813057550228],
    [0.8296975071346684, 0.15838487943291604, 0.011917613432415597, 0.00219813057550228],
    [0.02186348167356978, 0.3021920566497651, 0.6759444616766651, 0.0021621578227519612],
    [0.02186348167356978, 0.6759444616766651, 0.3021920566497651, 0.0021621578227519612],
    [0.3021920566497651, 0.02186348167356978, 0.6759444616766651, 0.0021621578227519612],
    [0.3021920566497651, 0.6759444616766651, 0.02186348167356978, 0.0021621578227519612],
    [0.6759444616766651, 0.02186348167356978, 0.3021920566497651, 0.0021621578227519612],
    [0.6759444616766651, 0.3021920566497651, 0.02186348167356978, 0.0021621578227519612],
    [0.00963945446221847, 0.26115967600845613, 0.7292008695293254, 0.0020600755049111122],
    [0.00963945446221847, 0.7292008695293254, 0.26115967600845613, 0.0020600755049111122],
    [0.26115967600845613, 0.00963945446221847, 0.7292008695293254, 0.0020600755049111122],
    [0.26115967600845613, 0.7292008695293254, 0.00963945446221847, 0.0020600755049111122],
    [0.7292008695293254, 0.00963945446221847, 0.26115967600845613, 0.0020600755049111122],
    [0.7292008695293254, 0.26115967600845613, 0.00963945446221847, 0.0020600755049111122],
    [0.05638313000292995, 0.14263794896017123, 0.8009789210368988, 0.0020441465080818758],
    [0.05638313000292995, 0.8009789210368988, 0.14263794896017123, 0.0020441465080818758],
    [0.14263794896017123, 0.05638313000292995, 0.8009789210368988, 0.0020441465080818758],
    [0.14263794896017123, 0.8009789210368988, 0.05638313000292995, 0.0020441465080818758],
    [0.8009789210368988, 0.05638313000292995, 0.14263794896017123, 0.0020441465080818758],
    [0.8009789210368988, 0.14263794896017123, 0.05638313000292995, 0.0020441465080818758],
    [0.011127411533384639, 0.14711144964307027, 0.8417611388235451, 0.0019159410949597885],
    [0.011127411533384639, 0.8417611388235451, 0.14711144964307027, 0.0019159410949597885],
    [0.14711144964307027, 0.011127411533384639, 0.8417611388235451, 0.0019159410949597885],
    [0.14711144964307027, 0.8417611388235451, 0.011127411533384639, 0.0019159410949597885],
    [0.8417611388235451, 0.011127411533384639, 0.14711144964307027, 0.0019159410949597885],
    [0.8417611388235451, 0.14711144964307027, 0.011127411533384639, 0.0019159410949597885],
    [0.007897973946063133, 0.3946398468857869, 0.5974621791681499, 0.0018791787246482175],
    [0.007897973946063133, 0.5974621791681499, 0.3946398468857869, 0.0018791787246482175],
    [0.3946398468857869, 0.007897973946063133, 0.5974621791681499, 0.0018791787246482175],
    [0.3946398468857869, 0.5974621791681499, 0.007897973946063133, 0.0018791787246482175],
    [0.5974621791681499, 0.007897973946063133, 0.3946398468857869, 0.0018791787246482175],
    [0.5974621791681499, 0.3946398468857869, 0.007897973946063133, 0.0018791787246482175],
    [0.03190212681118727, 0.1671189521519139, 0.8009789210368988, 0.0016632007997609917],
    [0.03190212681118727, 0.8009789210368988, 0.1671189521519139, 0.0016632007997609917],
    [0.1671189521519139, 0.03190212681118727, 0.8009789210368988, 0.0016632007997609917],
    [0.1671189521519139, 0.8009789210368988, 0.03190212681118727, 0.0016632007997609917],
    [0.8009789210368988, 0.03190212681118727, 0.1671189521519139, 0.0016632007997609917],
    [0.8009789210368988, 0.1671189521519139, 0.03190212681118727, 0.0016632007997609917],
    [0.011917613432415597, 0.06666425533867158, 0.9214181312289128, 0.0014994706943203407],
    [0.011917613432415597, 0.9214181312289128, 0.06666425533867158, 0.0014994706943203407],
    [0.06666425533867158, 0.011917613432415597, 0.9214181312289128, 0.0014994706943203407],
    [0.06666425533867158, 0.9214181312289128, 0.011917613432415597, 0.0014994706943203407],
    [0.9214181312289128, 0.011917613432415597, 0.06666425533867158, 0.0014994706943203407],
    [0.9214181312289128, 0.06666425533867158, 0.011917613432415597, 0.0014994706943203407],
    [0.006044046902949115, 0.4572171873813903, 0.5367387657156606, 0.0014679491145106417],
    [0.006044046902949115, 0.5367387657156606, 0.4572171873813903, 0.0014679491145106417],
    [0.4572171873813903, 0.006044046902949115, 0.5367387657156606, 0.0014679491145106417],
    [0.4572171873813903, 0.5367387657156606, 0.006044046902949115, 0.0014679491145106417],
    [0.5367387657156606, 0.006044046902949115, 0.4572171873813903, 0.0014679491145106417],
    [0.5367387657156606, 0.4572171873813903, 0.006044046902949115, 0.0014679491145106417],
    [0.012241333712862994, 0.06173207187714813, 0.9260265944099889, 0.0014287036709669616],
    [0.012241333712862994, 0.9260265944099889, 0.06173207187714813, 0.0014287036709669616],
    [0.06173207187714813, 0.012241333712862994, 0.9260265944099889, 0.0014287036709669616],
    [0.06173207187714813, 0.9260265944099889, 0.012241333712862994, 0.0014287036709669616],
    [0.9260265944099889, 0.012241333712862994, 0.06173207187714813, 0.0014287036709669616],
    [0.9260265944099889, 0.06173207187714813, 0.012241333712862994, 0.0014287036709669616],
    [0.013427617176603318, 0.18559346178649785, 0.8009789210368988, 0.00113456447301448],
    [0.013427617176603318, 0.8009789210368988, 0.18559346178649785, 0.00113456447301448],
    [0.18559346178649785, 0.013427617176603318, 0.8009789210368988, 0.00113456447301448],
    [0.18559346178649785, 0.8009789210368988, 0.013427617176603318, 0.00113456447301448],
    [0.8009789210368988, 0.013427617176603318, 0.18559346178649785, 0.00113456447301448],
    [0.8009789210368988, 0.18559346178649785, 0.013427617176603318, 0.00113456447301448],
    [0.004227866974046249, 0.31982767134928863, 0.6759444616766651, 0.0009645544819081985],
    [0.004227866974046249, 0.6759444616766651, 0.31982767134928863, 0.0009645544819081985],
    [0.31982767134928863, 0.004227866974046249, 0.6759444616766651, 0.0009645544819081985],
    [0.31982767134928863, 0.6759444616766651, 0.004227866974046249, 0.0009645544819081985],
    [0.6759444616766651, 0.004227866974046249, 0.31982767134928863, 0.0009645544819081985],
    [0.6759444616766651, 0.31982767134928863, 0.004227866974046249, 0.0009645544819081985],
    [0.041828150243976917, 0.05646086196587628, 0.9017109877901468, 0.0008293709838305658],
    [0.041828150243976917, 0.9017109877901468, 0.05646086196587628, 0.0008293709838305658],
    [0.05646086196587628, 0.041828150243976917, 0.9017109877901468, 0.0008293709838305658],
    [0.05646086196587628, 0.9017109877901468, 0.041828150243976917, 0.0008293709838305658],
    [0.9017109877901468, 0.041828150243976917, 0.05646086196587628, 0.0008293709838305658],
    [0.9017109877901468, 0.05646086196587628, 0.041828150243976917, 0.0008293709838305658],
    [0.02784550351229474, 0.07044350869755846, 0.9017109877901468, 0.0007556808722618808],
    [0.02784550351229474, 0.9017109877901468, 0.07044350869755846, 0.0007556808722618808],
    [0.07044350869755846, 0.02784550351229474, 0.9017109877901468, 0.0007556808722618808],
    [0.07044350869755846, 0.9017109877901468, 0.02784550351229474, 0.0007556808722618808],
    [0.9017109877901468, 0.02784550351229474, 0.07044350869755846, 0.0007556808722618808],
    [0.9017109877901468, 0.07044350869755846, 0.02784550351229474, 0.0007556808722618808],
    [0.011917613432415597, 0.012891249788293075, 0.9751911367792914, 0.000668924887664226],
    [0.011917613432415597, 0.9751911367792914, 0.012891249788293075, 0.000668924887664226],
    [0.012891249788293075, 0.011917613432415597, 0.9751911367792914, 0.000668924887664226],
    [0.012891249788293075, 0.9751911367792914, 0.011917613432415597, 0.000668924887664226],
    [0.9751911367792914, 0.011917613432415597, 0.012891249788293075, 0.000668924887664226],
    [0.9751911367792914, 0.012891249788293075, 0.011917613432415597, 0.000668924887664226],
    [0.015755258427909646, 0.08253375378194355, 0.9017109877901468, 0.00061485271537088],
    [0.015755258427909646, 0.9017109877901468, 0.08253375378194355, 0.00061485271537088],
    [0.08253375378194355, 0.015755258427909646, 0.9017109877901468, 0.00061485271537088],
    [0.08253375378194355, 0.9017109877901468, 0.015755258427909646, 0.00061485271537088],
    [0.9017109877901468, 0.015755258427909646, 0.08253375378194355, 0.00061485271537088],
    [0.9017109877901468, 0.08253375378194355, 0.015755258427909646, 0.00061485271537088],
    [0.0025965754242026954, 0.19642450353889848, 0.8009789210368988, 0.0005061375427567352],
    [0.0025965754242026954, 0.8009789210368988, 0.19642450353889848, 0.0005061375427567352],
    [0.19642450353889848, 0.0025965754242026954, 0.8009789210368988, 0.0005061375427567352],
    [0.19642450353889848, 0.8009789210368988, 0.0025965754242026954, 0.0005061375427567352],
    [0.8009789210368988, 0.0025965754242026954, 0.19642450353889848, 0.0005061375427567352],
    [0.8009789210368988, 0.19642450353889848, 0.0025965754242026954, 0.0005061375427567352],
    [0.006631394199531441, 0.09165761801032175, 0.9017109877901468, 0.00041942623349900434],
    [0.006631394199531441, 0.9017109877901468, 0.09165761801032175, 0.00041942623349900434],
    [0.09165761801032175, 0.006631394199531441, 0.9017109877901468, 0.00041942623349900434],
    [0.09165761801032175, 0.9017109877901468, 0.006631394199531441, 0.00041942623349900434],
    [0.9017109877901468, 0.006631394199531441, 0.09165761801032175, 0.00041942623349900434],
    [0.9017109877901468, 0.09165761801032175, 0.006631394199531441, 0.00041942623349900434],
    [0.0012823507685865813, 0.09700666144126661, 0.9017109877901468, 0.00018710912269874098],
    [0.0012823507685865813, 0.9017109877901468, 0.09700666144126661, 0.00018710912269874098],
    [0.09700666144126661, 0.0012823507685865813, 0.9017109877901468, 0.00018710912269874098],
    [0.09700666144126661, 0.9017109877901468, 0.0012823507685865813, 0.00018710912269874098],
    [0.9017109877901468, 0.0012823507685865813, 0.09700666144126661, 0.00018710912269874098],
    [0.9017109877901468, 0.09700666144126661, 0.0012823507685865813, 0.00018710912269874098],
    [0.012779239924093504, 0.017249792237392942, 0.9699709678385136, 0.00014767745475485154],
    [0.012779239924093504, 0.9699709678385136, 0.017249792237392942, 0.00014767745475485154],
    [0.017249792237392942, 0.012779239924093504, 0.9699709678385136, 0.00014767745475485154],
    [0.017249792237392942, 0.9699709678385136, 0.012779239924093504, 0.00014767745475485154],
    [0.9699709678385136, 0.012779239924093504, 0.017249792237392942, 0.00014767745475485154],
    [0.9699709678385136, 0.017249792237392942, 0.012779239924093504, 0.00014767745475485154],
    [0.008507293966269593, 0.021521738195216855, 0.9699709678385136, 0.0001345562239314597],
    [0.008507293966269593, 0.9699709678385136, 0.021521738195216855, 0.0001345562239314597],
    [0.021521738195216855, 0.008507293966269593, 0.9699709678385136, 0.0001345562239314597],
    [0.021521738195216855, 0.9699709678385136, 0.008507293966269593, 0.0001345562239314597],
    [0.9699709678385136, 0.008507293966269593, 0.021521738195216855, 0.0001345562239314597],
    [0.9699709678385136, 0.021521738195216855, 0.008507293966269593, 0.0001345562239314597],
    [0.00481351019210671, 0.025215521969379737, 0.9699709678385136, 0.00010948042049374428],
    [0.00481351019210671, 0.9699709678385136, 0.025215521969379737, 0.00010948042049374428],
    [0.025215521969379737, 0.00481351019210671, 0.9699709678385136, 0.00010948042049374428],
    [0.025215521969379737, 0.9699709678385136, 0.00481351019210671, 0.00010948042049374428],
    [0.9699709678385136, 0.00481351019210671, 0.025215521969379737, 0.00010948042049374428],
    [0.9699709678385136, 0.025215521969379737, 0.00481351019210671, 0.00010948042049374428],
    [0.0020260082507295935, 0.028003023910756854, 0.9699709678385136, 7.468286186534933e-05],
    [0.0020260082507295935, 0.9699709678385136, 0.028003023910756854, 7.468286186534933e-05],
    [0.028003023910756854, 0.0020260082507295935, 0.9699709678385136, 7.468286186534933e-05],
    [0.028003023910756854, 0.9699709678385136, 0.0020260082507295935, 7.468286186534933e-05],
    [0.9699709678385136, 0.0020260082507295935, 0.028003023910756854, 7.468286186534933e-05],
    [0.9699709678385136, 0.028003023910756854, 0.0020260082507295935, 7.468286186534933e-05],
    [0.00039178084718133956, 0.029637251314305106, 0.9699709678385136, 3.3316573090056704e-05],
    [0.00039178084718133956, 0.9699709678385136, 0.029637251314305106, 3.3316573090056704e-05],
    [0.029637251314305106, 0.00039178084718133956, 0.9699709678385136, 3.3316573090056704e-05],
    [0.029637251314305106, 0.9699709678385136, 0.00039178084718133956, 3.3316573090056704e-05],
    [0.9699709678385136, 0.00039178084718133956, 0.029637251314305106, 3.3316573090056704e-05],
    [0.9699709678385136, 0.029637251314305106, 0.00039178084718133956, 3.3316573090056704e-05],
];

pub(crate) static RULE_D19: [[f64; 4]; 363] = [
    [0.2228406070438379, 0.38857969647808105, 0.38857969647808105, 0.007701893445729174],
    [0.38857969647808105, 0.2228406070438379, 0.38857969647808105, 0.007701893445729174],
    [0.38857969647808105, 0.38857969647808105, 0.2228406070438379, 0.007701893445729174],
    [0.3299959210426674, 0.3299959210426674, 0.3400081579146652, 0.007448953762771298],
    [0.3299959210426674, 0.3400081579146652, 0.3299959210426674, 0.007448953762771298],
    [0.3400081579146652, 0.3299959210426674, 0.3299959210426674, 0.007448953762771298],
    [0.2228406070438379, 0.2838406987503748, 0.4933186942057873, 0.007416293689844872],
    [0.2228406070438379, 0.4933186942057873, 0.2838406987503748, 0.007416293689844872],
    [0.2838406987503748, 0.2228406070438379, 0.4933186942057873, 0.007416293689844872],
    [0.2838406987503748, 0.4933186942057873, 0.2228406070438379, 0.007416293689844872],
    [0.4933186942057873, 0.2228406070438379, 0.2838406987503748, 0.007416293689844872],
    [0.4933186942057873, 0.2838406987503748, 0.2228406070438379, 0.007416293689844872],
    [0.241047779033426, 0.3400081579146652, 0.4189440630519088, 0.00717273345522853],
    [0.241047779033426, 0.4189440630519088, 0.3400081579146652, 0.00717273345522853],
    [0.3400081579146652, 0.241047779033426, 0.4189440630519088, 0.00717273345522853],
    [0.3400081579146652, 0.4189440630519088, 0.241047779033426, 0.00717273345522853],
    [0.4189440630519088, 0.241047779033426, 0.3400081579146652, 0.00717273345522853],
    [0.4189440630519088, 0.3400081579146652, 0.241047779033426, 0.00717273345522853],
    [0.12461922514444307, 0.43769038742777844, 0.43769038742777844, 0.006879536059385602],
    [0.43769038742777844, 0.12461922514444307, 0.43769038742777844, 0.006879536059385602],
    [0.43769038742777844, 0.43769038742777844, 0.12461922514444307, 0.006879536059385602],
    [0.12461922514444307, 0.3197139390704905, 0.5556668357850664, 0.006624430761837336],
    [0.12461922514444307, 0.5556668357850664, 0.3197139390704905, 0.006624430761837336],
    [0.3197139390704905, 0.12461922514444307, 0.5556668357850664, 0.006624430761837336],
    [0.3197139390704905, 0.5556668357850664, 0.12461922514444307, 0.006624430761837336],
    [0.5556668357850664, 0.12461922514444307, 0.3197139390704905, 0.006624430761837336],
    [0.5556668357850664, 0.3197139390704905, 0.12461922514444307, 0.006624430761837336],
    [0.18686948014795138, 0.2228406070438379, 0.5902899128082107, 0.006580683176836466],
    [0.18686948014795138, 0.5902899128082107, 0.2228406070438379, 0.006580683176836466],
    [0.2228406070438379, 0.18686948014795138, 0.5902899128082107, 0.006580683176836466],
    [0.2228406070438379, 0.5902899128082107, 0.18686948014795138, 0.006580683176836466],
    [0.5902899128082107, 0.18686948014795138, 0.2228406070438379, 0.006580683176836466],
    [0.5902899128082107, 0.2228406070438379, 0.18686948014795138, 0.006580683176836466],
    [0.15869631577538204, 0.3400081579146652, 0.5012955263099528, 0.006364565422400607],
    [0.15869631577538204, 0.5012955263099528, 0.3400081579146652, 0.006364565422400607],
    [0.3400081579146652, 0.15869631577538204, 0.5012955263099528, 0.006364565422400607],
    [0.3400081579146652, 0.5012955263099528, 0.15869631577538204, 0.006364565422400607],
    [0.5012955263099528, 0.15869631577538204, 0.3400081579146652, 0.006364565422400607],
    [0.5012955263099528, 0.3400081579146652, 0.15869631577538204, 0.006364565422400607],
    [0.265931193455208, 0.265931193455208, 0.46813761308958407, 0.0063256643537924215],
    [0.265931193455208, 0.46813761308958407, 0.265931193455208, 0.0063256643537924215],
    [0.46813761308958407, 0.265931193455208, 0.265931193455208, 0.0063256643537924215],
    [0.19425126030511766, 0.33761112660529835, 0.46813761308958407, 0.006091097593296541],
    [0.19425126030511766, 0.46813761308958407, 0.33761112660529835, 0.006091097593296541],
    [0.33761112660529835, 0.19425126030511766, 0.46813761308958407, 0.006091097593296541],
    [0.33761112660529835, 0.46813761308958407, 0.19425126030511766, 0.006091097593296541],
    [0.46813761308958407, 0.19425126030511766, 0.33761112660529835, 0.006091097593296541],
    [0.46813761308958407, 0.33761112660529835, 0.19425126030511766, 0.006091097593296541],
    [0.12461922514444307, 0.21048700152298885, 0.664893773332568, 0.0058780412283608975],
    [0.12461922514444307, 0.664893773332568, 0.21048700152298885, 0.0058780412283608975],
    [0.21048700152298885, 0.12461922514444307, 0.664893773332568, 0.0058780412283608975],
    [0.21048700152298885, 0.664893773332568, 0.12461922514444307, 0.0058780412283608975],
    [0.664893773332568, 0.12461922514444307, 0.21048700152298885, 0.0058780412283608975],
    [0.664893773332568, 0.21048700152298885, 0.12461922514444307, 0.0058780412283608975],
    [0.12788734029726168, 0.4039750466131543, 0.46813761308958407, 0.005404799909092337],
    [0.12788734029726168, 0.46813761308958407, 0.4039750466131543, 0.005404799909092337],
    [0.4039750466131543, 0.12788734029726168, 0.46813761308958407, 0.005404799909092337],
    [0.4039750466131543, 0.46813761308958407, 0.12788734029726168, 0.005404799909092337],
    [0.46813761308958407, 0.12788734029726168, 0.4039750466131543, 0.005404799909092337],
    [0.46813761308958407, 0.4039750466131543, 0.12788734029726168, 0.005404799909092337],
    [0.1048574517692548, 0.2228406070438379, 0.6723019411869073, 0.005257073915361304],
    [0.1048574517692548, 0.6723019411869073, 0.2228406070438379, 0.005257073915361304],
    [0.2228406070438379, 0.1048574517692548, 0.6723019411869073, 0.005257073915361304],
    [0.2228406070438379, 0.6723019411869073, 0.1048574517692548, 0.005257073915361304],
    [0.6723019411869073, 0.1048574517692548, 0.2228406070438379, 0.005257073915361304],
    [0.6723019411869073, 0.2228406070438379, 0.1048574517692548, 0.005257073915361304],
    [0.08904873746210816, 0.3400081579146652, 0.5709431046232266, 0.005084425122073342],
    [0.08904873746210816, 0.5709431046232266, 0.3400081579146652, 0.005084425122073342],
    [0.3400081579146652, 0.08904873746210816, 0.5709431046232266, 0.005084425122073342],
    [0.3400081579146652, 0.5709431046232266, 0.08904873746210816, 0.005084425122073342],
    [0.5709431046232266, 0.08904873746210816, 0.3400081579146652, 0.005084425122073342],
    [0.5709431046232266, 0.3400081579146652, 0.08904873746210816, 0.005084425122073342],
    [0.052035451127180554, 0.4739822744364097, 0.4739822744364097, 0.0049979944299503995],
    [0.4739822744364097, 0.052035451127180554, 0.4739822744364097, 0.0049979944299503995],
    [0.4739822744364097, 0.4739822744364097, 0.052035451127180554, 0.0049979944299503995],
    [0.052035451127180554, 0.3462235963193494, 0.60174095255347, 0.0048126600054789114],
    [0.052035451127180554, 0.60174095255347, 0.3462235963193494, 0.0048126600054789114],
    [0.3462235963193494, 0.052035451127180554, 0.60174095255347, 0.0048126600054789114],
    [0.3462235963193494, 0.60174095255347, 0.052035451127180554, 0.0048126600054789114],
    [0.60174095255347, 0.052035451127180554, 0.3462235963193494, 0.0048126600054789114],
    [0.60174095255347, 0.3462235963193494, 0.052035451127180554, 0.0048126600054789114],
    [0.11810987322690333, 0.12461922514444307, 0.7572709016286535, 0.004695758234312929],
    [0.11810987322690333, 0.7572709016286535, 0.12461922514444307, 0.004695758234312929],
    [0.12461922514444307, 0.11810987322690333, 0.7572709016286535, 0.004695758234312929],
    [0.12461922514444307, 0.7572709016286535, 0.11810987322690333, 0.004695758234312929],
    [0.7572709016286535, 0.11810987322690333, 0.12461922514444307, 0.004695758234312929],
    [0.7572709016286535, 0.12461922514444307, 0.11810987322690333, 0.004695758234312929],
    [0.2007513601164304, 0.2007513601164304, 0.5984972797671392, 0.004693525529492261],
    [0.2007513601164304, 0.5984972797671392, 0.2007513601164304, 0.004693525529492261],
    [0.5984972797671392, 0.2007513601164304, 0.2007513601164304, 0.004693525529492261],
    [0.14664020494892205, 0.2548625152839388, 0.5984972797671392, 0.004519481347382336],
    [0.14664020494892205, 0.5984972797671392, 0.2548625152839388, 0.004519481347382336],
    [0.2548625152839388, 0.14664020494892205, 0.5984972797671392, 0.004519481347382336],
    [0.2548625152839388, 0.5984972797671392, 0.14664020494892205, 0.004519481347382336],
    [0.5984972797671392, 0.14664020494892205, 0.2548625152839388, 0.004519481347382336],
    [0.5984972797671392, 0.2548625152839388, 0.14664020494892205, 0.004519481347382336],
    [0.07176099920918737, 0.4601013877012286, 0.46813761308958407, 0.004317702563139603],
    [0.07176099920918737, 0.46813761308958407, 0.4601013877012286, 0.004317702563139603],
    [0.4601013877012286, 0.07176099920918737, 0.46813761308958407, 0.004317702563139603],
    [0.4601013877012286, 0.46813761308958407, 0.07176099920918737, 0.004317702563139603],
    [0.46813761308958407, 0.07176099920918737, 0.4601013877012286, 0.004317702563139603],
    [0.46813761308958407, 0.4601013877012286, 0.07176099920918737, 0.004317702563139603],
    [0.052035451127180554, 0.22793991046382864, 0.7200246384089908, 0.004270406763590727],
    [0.052035451127180554, 0.7200246384089908, 0.22793991046382864, 0.004270406763590727],
    [0.22793991046382864, 0.052035451127180554, 0.7200246384089908, 0.004270406763590727],
    [0.22793991046382864, 0.7200246384089908, 0.052035451127180554, 0.004270406763590727],
    [0.7200246384089908, 0.052035451127180554, 0.22793991046382864, 0.004270406763590727],
    [0.7200246384089908, 0.22793991046382864, 0.052035451127180554, 0.004270406763590727],
    [0.09654210614698865, 0.30496061408587216, 0.5984972797671392, 0.0040102612051987445],
    [0.09654210614698865, 0.5984972797671392, 0.30496061408587216, 0.0040102612051987445],
    [0.30496061408587216, 0.09654210614698865, 0.5984972797671392, 0.0040102612051987445],
    [0.30496061408587216, 0.5984972797671392, 0.09654210614698865, 0.0040102612051987445],
    [0.5984972797671392, 0.09654210614698865, 0.30496061408587216, 0.0040102612051987445],
    [0.5984972797671392, 0.30496061408587216, 0.09654210614698865, 0.0040102612051987445],
    [0.04388518070313708, 0.2228406070438379, 0.733274212253025, 0.003543853868153514],
    [0.04388518070313708, 0.733274212253025, 0.2228406070438379, 0.003543853868153514],
    [0.2228406070438379, 0.04388518070313708, 0.733274212253025, 0.003543853868153514],
    [0.2228406070438379, 0.733274212253025, 0.04388518070313708, 0.003543853868153514],
    [0.733274212253025, 0.04388518070313708, 0.2228406070438379, 0.003543853868153514],
    [0.733274212253025, 0.2228406070438379, 0.04388518070313708, 0.003543853868153514],
    [0.03726888140969174, 0.3400081579146652, 0.622722960675643, 0.003427469334898662],
    [0.03726888140969174, 0.622722960675643, 0.3400081579146652, 0.003427469334898662],
    [0.3400081579146652, 0.03726888140969174, 0.622722960675643, 0.003427469334898662],
    [0.3400081579146652, 0.622722960675643, 0.03726888140969174, 0.003427469334898662],
    [0.622722960675643, 0.03726888140969174, 0.3400081579146652, 0.003427469334898662],
    [0.622722960675643, 0.3400081579146652, 0.03726888140969174, 0.003427469334898662],
    [0.052035451127180554, 0.1279031661501157, 0.8200613827227037, 0.0034114761950365794],
    [0.052035451127180554, 0.8200613827227037, 0.1279031661501157, 0.0034114761950365794],
    [0.1279031661501157, 0.052035451127180554, 0.8200613827227037, 0.0034114761950365794],
    [0.1279031661501157, 0.8200613827227037, 0.052035451127180554, 0.0034114761950365794],
    [0.8200613827227037, 0.052035451127180554, 0.1279031661501157, 0.0034114761950365794],
    [0.8200613827227037, 0.1279031661501157, 0.052035451127180554, 0.0034114761950365794],
    [0.05417235190570052, 0.3473303683271603, 0.5984972797671392, 0.0032036551538970424],
    [0.05417235190570052, 0.5984972797671392, 0.3473303683271603, 0.0032036551538970424],
    [0.3473303683271603, 0.05417235190570052, 0.5984972797671392, 0.0032036551538970424],
    [0.3473303683271603, 0.5984972797671392, 0.05417235190570052, 0.0032036551538970424],
    [0.5984972797671392, 0.05417235190570052, 0.3473303683271603, 0.0032036551538970424],
    [0.5984972797671392, 0.3473303683271603, 0.05417235190570052, 0.0032036551538970424],
    [0.04943161446258844, 0.12461922514444307, 0.8259491603929684, 0.0031654645246584653],
    [0.04943161446258844, 0.8259491603929684, 0.12461922514444307, 0.0031654645246584653],
    [0.12461922514444307, 0.04943161446258844, 0.8259491603929684, 0.0031654645246584653],
    [0.12461922514444307, 0.8259491603929684, 0.04943161446258844, 0.0031654645246584653],
    [0.8259491603929684, 0.04943161446258844, 0.12461922514444307, 0.0031654645246584653],
    [0.8259491603929684, 0.12461922514444307, 0.04943161446258844, 0.0031654645246584653],
    [0.13889835755451607, 0.13889835755451607, 0.7222032848909679, 0.002969565656479288],
    [0.13889835755451607, 0.7222032848909679, 0.13889835755451607, 0.002969565656479288],
    [0.7222032848909679, 0.13889835755451607, 0.13889835755451607, 0.002969565656479288],
    [0.030033577629398896, 0.46813761308958407, 0.5018288092810171, 0.0029106128573174166],
    [0.030033577629398896, 0.5018288092810171, 0.46813761308958407, 0.0029106128573174166],
    [0.46813761308958407, 0.030033577629398896, 0.5018288092810171, 0.0029106128573174166],
    [0.46813761308958407, 0.5018288092810171, 0.030033577629398896, 0.0029106128573174166],
    [0.5018288092810171, 0.030033577629398896, 0.46813761308958407, 0.0029106128573174166],
    [0.5018288092810171, 0.46813761308958407, 0.030033577629398896, 0.0029106128573174166],
    [0.10145925590267459, 0.17633745920635757, 0.7222032848909679, 0.002859448938746302],
    [0.10145925590267459, 0.7222032848909679, 0.17633745920635757, 0.002859448938746302],
    [0.17633745920635757, 0.10145925590267459, 0.7222032848909679, 0.002859448938746302],
    [0.17633745920635757, 0.7222032848909679, 0.10145925590267459, 0.002859448938746302],
    [0.7222032848909679, 0.10145925590267459, 0.17633745920635757, 0.002859448938746302],
    [0.7222032848909679, 0.17633745920635757, 0.10145925590267459, 0.002859448938746302],
    [0.06679675779478306, 0.2109999573142491, 0.7222032848909679, 0.002537268386768038],
    [0.06679675779478306, 0.7222032848909679, 0.2109999573142491, 0.002537268386768038],
    [0.2109999573142491, 0.06679675779478306, 0.7222032848909679, 0.002537268386768038],
    [0.2109999573142491, 0.7222032848909679, 0.06679675779478306, 0.002537268386768038],
    [0.7222032848909679, 0.06679675779478306, 0.2109999573142491, 0.002537268386768038],
    [0.7222032848909679, 0.2109999573142491, 0.06679675779478306, 0.002537268386768038],
    [0.010018280461680407, 0.4949908597691598, 0.4949908597691598, 0.002307794552878524],
    [0.4949908597691598, 0.010018280461680407, 0.4949908597691598, 0.002307794552878524],
    [0.4949908597691598, 0.4949908597691598, 0.010018280461680407, 0.002307794552878524],
    [0.052035451127180554, 0.053530325830853286, 0.8944342230419662, 0.0022997152607208715],
    [0.052035451127180554, 0.8944342230419662, 0.053530325830853286, 0.0022997152607208715],
    [0.053530325830853286, 0.052035451127180554, 0.8944342230419662, 0.0022997152607208715],
    [0.053530325830853286, 0.8944342230419662, 0.052035451127180554, 0.0022997152607208715],
    [0.8944342230419662, 0.052035451127180554, 0.053530325830853286, 0.0022997152607208715],
    [0.8944342230419662, 0.053530325830853286, 0.052035451127180554, 0.0022997152607208715],
    [0.010018280461680407, 0.36156946125941586, 0.6284122582789038, 0.002222217471661085],
    [0.010018280461680407, 0.6284122582789038, 0.36156946125941586, 0.002222217471661085],
    [0.36156946125941586, 0.010018280461680407, 0.6284122582789038, 0.002222217471661085],
    [0.36156946125941586, 0.6284122582789038, 0.010018280461680407, 0.002222217471661085],
    [0.6284122582789038, 0.010018280461680407, 0.36156946125941586, 0.002222217471661085],
    [0.6284122582789038, 0.36156946125941586, 0.010018280461680407, 0.002222217471661085],
    [0.02267233670456853, 0.3788303835282923, 0.5984972797671392, 0.002159620711474759],
    [0.02267233670456853, 0.5984972797671392, 0.3788303835282923, 0.002159620711474759],
    [0.3788303835282923, 0.02267233670456853, 0.5984972797671392, 0.002159620711474759],
    [0.3788303835282923, 0.5984972797671392, 0.02267233670456853, 0.002159620711474759],
    [0.5984972797671392, 0.02267233670456853, 0.3788303835282923, 0.002159620711474759],
    [0.5984972797671392, 0.3788303835282923, 0.02267233670456853, 0.002159620711474759],
    [0.03748144321514475, 0.2403152718938874, 0.7222032848909679, 0.002026933540775835],
    [0.03748144321514475, 0.7222032848909679, 0.2403152718938874, 0.002026933540775835],
    [0.2403152718938874, 0.03748144321514475, 0.7222032848909679, 0.002026933540775835],
    [0.2403152718938874, 0.7222032848909679, 0.03748144321514475, 0.002026933540775835],
    [0.7222032848909679, 0.03748144321514475, 0.2403152718938874, 0.002026933540775835],
    [0.7222032848909679, 0.2403152718938874, 0.03748144321514475, 0.002026933540775835],
    [0.010018280461680407, 0.23804302047023715, 0.7519386990680824, 0.001971835224251759],
    [0.010018280461680407, 0.7519386990680824, 0.23804302047023715, 0.001971835224251759],
    [0.23804302047023715, 0.010018280461680407, 0.7519386990680824, 0.001971835224251759],
    [0.23804302047023715, 0.7519386990680824, 0.010018280461680407, 0.001971835224251759],
    [0.7519386990680824, 0.010018280461680407, 0.23804302047023715, 0.001971835224251759],
    [0.7519386990680824, 0.23804302047023715, 0.010018280461680407, 0.001971835224251759],
    [0.010018280461680407, 0.13357229076788474, 0.8564094287704349, 0.001575229082489855],
    [0.010018280461680407, 0.8564094287704349, 0.13357229076788474, 0.001575229082489855],
    [0.13357229076788474, 0.010018280461680407, 0.8564094287704349, 0.001575229082489855],
    [0.13357229076788474, 0.8564094287704349, 0.010018280461680407, 0.001575229082489855],
    [0.8564094287704349, 0.010018280461680407, 0.13357229076788474, 0.001575229082489855],
    [0.8564094287704349, 0.13357229076788474, 0.010018280461680407, 0.001575229082489855],
    [0.008459901409525723, 0.2228406070438379, 0.7686994915466364, 0.0015709562549451406],
    [0.008459901409525723, 0.7686994915466364, 0.2228406070438379, 0.0015709562549451406],
    [0.2228406070438379, 0.008459901409525723, 0.7686994915466364, 0.0015709562549451406],
    [0.2228406070438379, 0.7686994915466364, 0.008459901409525723, 0.0015709562549451406],
    [0.7686994915466364, 0.008459901409525723, 0.2228406070438379, 0.0015709562549451406],
    [0.7686994915466364, 0.2228406070438379, 0.008459901409525723, 0.0015709562549451406],
    [0.007184454007426703, 0.3400081579146652, 0.6528073880779081, 0.0015193641133676875],
    [0.007184454007426703, 0.6528073880779081, 0.3400081579146652, 0.0015193641133676875],
    [0.3400081579146652, 0.007184454007426703, 0.6528073880779081, 0.0015193641133676875],
    [0.3400081579146652, 0.6528073880779081, 0.007184454007426703, 0.0015193641133676875],
    [0.6528073880779081, 0.007184454007426703, 0.3400081579146652, 0.0015193641133676875],
    [0.6528073880779081, 0.3400081579146652, 0.007184454007426703, 0.0015193641133676875],
    [0.08458755018859071, 0.08458755018859071, 0.8308248996228186, 0.0015159736255280726],
    [0.08458755018859071, 0.8308248996228186, 0.08458755018859071, 0.0015159736255280726],
    [0.8308248996228186, 0.08458755018859071, 0.08458755018859071, 0.0015159736255280726],
    [0.061787554956480605, 0.10738754542070081, 0.8308248996228186, 0.0014597586570364038],
    [0.061787554956480605, 0.8308248996228186, 0.10738754542070081, 0.0014597586570364038],
    [0.10738754542070081, 0.061787554956480605, 0.8308248996228186, 0.0014597586570364038],
    [0.10738754542070081, 0.8308248996228186, 0.061787554956480605, 0.0014597586570364038],
    [0.8308248996228186, 0.061787554956480605, 0.10738754542070081, 0.0014597586570364038],
    [0.8308248996228186, 0.10738754542070081, 0.061787554956480605, 0.0014597586570364038],
    [0.009529107050874931, 0.12461922514444307, 0.8658516678046819, 0.0014032199068665853],
    [0.009529107050874931, 0.8658516678046819, 0.12461922514444307, 0.0014032199068665853],
    [0.12461922514444307, 0.009529107050874931, 0.8658516678046819, 0.0014032199068665853],
    [0.12461922514444307, 0.8658516678046819, 0.009529107050874931, 0.0014032199068665853],
    [0.8658516678046819, 0.009529107050874931, 0.12461922514444307, 0.0014032199068665853],
    [0.8658516678046819, 0.12461922514444307, 0.009529107050874931, 0.0014032199068665853],
    [0.015686819398688583, 0.26210989571034354, 0.7222032848909679, 0.0013663791654097113],
    [0.015686819398688583, 0.7222032848909679, 0.26210989571034354, 0.0013663791654097113],
    [0.26210989571034354, 0.015686819398688583, 0.7222032848909679, 0.0013663791654097113],
    [0.26210989571034354, 0.7222032848909679, 0.015686819398688583, 0.0013663791654097113],
    [0.7222032848909679, 0.015686819398688583, 0.26210989571034354, 0.0013663791654097113],
    [0.7222032848909679, 0.26210989571034354, 0.015686819398688583, 0.0013663791654097113],
    [0.04067848030660635, 0.12849662007057508, 0.8308248996228186, 0.0012952843614802677],
    [0.04067848030660635, 0.8308248996228186, 0.12849662007057508, 0.0012952843614802677],
    [0.12849662007057508, 0.04067848030660635, 0.8308248996228186, 0.0012952843614802677],
    [0.12849662007057508, 0.8308248996228186, 0.04067848030660635, 0.0012952843614802677],
    [0.8308248996228186, 0.04067848030660635, 0.12849662007057508, 0.0012952843614802677],
    [0.8308248996228186, 0.12849662007057508, 0.04067848030660635, 0.0012952843614802677],
    [0.005789678922340389, 0.46813761308958407, 0.5260727079880756, 0.0012902466196522279],
    [0.005789678922340389, 0.5260727079880756, 0.46813761308958407, 0.0012902466196522279],
    [0.46813761308958407, 0.005789678922340389, 0.5260727079880756, 0.0012902466196522279],
    [0.46813761308958407, 0.5260727079880756, 0.005789678922340389, 0.0012902466196522279],
    [0.5260727079880756, 0.005789678922340389, 0.46813761308958407, 0.0012902466196522279],
    [0.5260727079880756, 0.46813761308958407, 0.005789678922340389, 0.0012902466196522279],
    [0.010018280461680407, 0.05590298084088421, 0.9340787386974354, 0.0010618800053196363],
    [0.010018280461680407, 0.9340787386974354, 0.05590298084088421, 0.0010618800053196363],
    [0.05590298084088421, 0.010018280461680407, 0.9340787386974354, 0.0010618800053196363],
    [0.05590298084088421, 0.9340787386974354, 0.010018280461680407, 0.0010618800053196363],
    [0.9340787386974354, 0.010018280461680407, 0.05590298084088421, 0.0010618800053196363],
    [0.9340787386974354, 0.05590298084088421, 0.010018280461680407, 0.0010618800053196363],
    [0.022825780771795645, 0.14634931960538577, 0.8308248996228186, 0.0010347566425446461],
    [0.022825780771795645, 0.8308248996228186, 0.14634931960538577, 0.0010347566425446461],
    [0.14634931960538577, 0.022825780771795645, 0.8308248996228186, 0.0010347566425446461],
    [0.14634931960538577, 0.8308248996228186, 0.022825780771795645, 0.0010347566425446461],
    [0.8308248996228186, 0.022825780771795645, 0.14634931960538577, 0.0010347566425446461],
    [0.8308248996228186, 0.14634931960538577, 0.022825780771795645, 0.0010347566425446461],
    [0.010319230129464518, 0.052035451127180554, 0.9376453187433549, 0.0010194416044882325],
    [0.010319230129464518, 0.9376453187433549, 0.052035451127180554, 0.0010194416044882325],
    [0.052035451127180554, 0.010319230129464518, 0.9376453187433549, 0.0010194416044882325],
    [0.052035451127180554, 0.9376453187433549, 0.010319230129464518, 0.0010194416044882325],
    [0.9376453187433549, 0.010319230129464518, 0.052035451127180554, 0.0010194416044882325],
    [0.9376453187433549, 0.052035451127180554, 0.010319230129464518, 0.0010194416044882325],
    [0.0043706264887388305, 0.397132093744122, 0.5984972797671392, 0.0009573390414001638],
    [0.0043706264887388305, 0.5984972797671392, 0.397132093744122, 0.0009573390414001638],
    [0.397132093744122, 0.0043706264887388305, 0.5984972797671392, 0.0009573390414001638],
    [0.397132093744122, 0.5984972797671392, 0.0043706264887388305, 0.0009573390414001638],
    [0.5984972797671392, 0.0043706264887388305, 0.397132093744122, 0.0009573390414001638],
    [0.5984972797671392, 0.397132093744122, 0.0043706264887388305, 0.0009573390414001638],
    [0.009553098010285194, 0.15962200236689622, 0.8308248996228186, 0.0006975413298953708],
    [0.009553098010285194, 0.8308248996228186, 0.15962200236689622, 0.0006975413298953708],
    [0.15962200236689622, 0.009553098010285194, 0.8308248996228186, 0.0006975413298953708],
    [0.15962200236689622, 0.8308248996228186, 0.009553098010285194, 0.0006975413298953708],
    [0.8308248996228186, 0.009553098010285194, 0.15962200236689622, 0.0006975413298953708],
    [0.8308248996228186, 0.15962200236689622, 0.009553098010285194, 0.0006975413298953708],
    [0.0030240036252705796, 0.2747727114837616, 0.7222032848909679, 0.0006057027113382439],
    [0.0030240036252705796, 0.7222032848909679, 0.2747727114837616, 0.0006057027113382439],
    [0.2747727114837616, 0.0030240036252705796, 0.7222032848909679, 0.0006057027113382439],
    [0.2747727114837616, 0.7222032848909679, 0.0030240036252705796, 0.0006057027113382439],
    [0.7222032848909679, 0.0030240036252705796, 0.2747727114837616, 0.0006057027113382439],
    [0.7222032848909679, 0.2747727114837616, 0.0030240036252705796, 0.0006057027113382439],
    [0.041520806723702564, 0.041520806723702564, 0.9169583865525949, 0.0005498458842059063],
    [0.041520806723702564, 0.9169583865525949, 0.041520806723702564, 0.0005498458842059063],
    [0.9169583865525949, 0.041520806723702564, 0.041520806723702564, 0.0005498458842059063],
    [0.030329157441708433, 0.0527124560056967, 0.9169583865525949, 0.0005294566316916075],
    [0.030329157441708433, 0.9169583865525949, 0.0527124560056967, 0.0005294566316916075],
    [0.0527124560056967, 0.030329157441708433, 0.9169583865525949, 0.0005294566316916075],
    [0.0527124560056967, 0.9169583865525949, 0.030329157441708433, 0.0005294566316916075],
    [0.9169583865525949, 0.030329157441708433, 0.0527124560056967, 0.0005294566316916075],
    [0.9169583865525949, 0.0527124560056967, 0.030329157441708433, 0.0005294566316916075],
    [0.010018280461680407, 0.010776615222611552, 0.9792051043157081, 0.00047072116921887693],
    [0.010018280461680407, 0.9792051043157081, 0.010776615222611552, 0.00047072116921887693],
    [0.010776615222611552, 0.010018280461680407, 0.9792051043157081, 0.00047072116921887693],
    [0.010776615222611552, 0.9792051043157081, 0.010018280461680407, 0.00047072116921887693],
    [0.9792051043157081, 0.010018280461680407, 0.010776615222611552, 0.00047072116921887693],
    [0.9792051043157081, 0.010776615222611552, 0.010018280461680407, 0.00047072116921887693],
    [0.019967516671884396, 0.06307409677552073, 0.9169583865525949, 0.0004698015605569069],
    [0.019967516671884396, 0.9169583865525949, 0.06307409677552073, 0.0004698015605569069],
    [0.06307409677552073, 0.019967516671884396, 0.9169583865525949, 0.0004698015605569069],
    [0.06307409677552073, 0.9169583865525949, 0.019967516671884396, 0.0004698015605569069],
    [0.9169583865525949, 0.019967516671884396, 0.06307409677552073, 0.0004698015605569069],
    [0.9169583865525949, 0.06307409677552073, 0.019967516671884396, 0.0004698015605569069],
    [0.011204306421338663, 0.07183730702606647, 0.9169583865525949, 0.00037530777018611136],
    [0.011204306421338663, 0.9169583865525949, 0.07183730702606647, 0.00037530777018611136],
    [0.07183730702606647, 0.011204306421338663, 0.9169583865525949, 0.00037530777018611136],
    [0.07183730702606647, 0.9169583865525949, 0.011204306421338663, 0.00037530777018611136],
    [0.9169583865525949, 0.011204306421338663, 0.07183730702606647, 0.00037530777018611136],
    [0.9169583865525949, 0.07183730702606647, 0.011204306421338663, 0.00037530777018611136],
    [0.0018415844717433712, 0.16733351590543805, 0.8308248996228186, 0.000309213346839508],
    [0.0018415844717433712, 0.8308248996228186, 0.16733351590543805, 0.000309213346839508],
    [0.16733351590543805, 0.0018415844717433712, 0.8308248996228186, 0.000309213346839508],
    [0.16733351590543805, 0.8308248996228186, 0.0018415844717433712, 0.000309213346839508],
    [0.8308248996228186, 0.0018415844717433712, 0.16733351590543805, 0.000309213346839508],
    [0.8308248996228186, 0.16733351590543805, 0.0018415844717433712, 0.000309213346839508],
    [0.0046892519669063555, 0.07835236148049878, 0.9169583865525949, 0.00025299927574457757],
    [0.0046892519669063555, 0.9169583865525949, 0.07835236148049878, 0.00025299927574457757],
    [0.07835236148049878, 0.0046892519669063555, 0.9169583865525949, 0.00025299927574457757],
    [0.07835236148049878, 0.9169583865525949, 0.0046892519669063555, 0.00025299927574457757],
    [0.9169583865525949, 0.0046892519669063555, 0.07835236148049878, 0.00025299927574457757],
    [0.9169583865525949, 0.07835236148049878, 0.0046892519669063555, 0.00025299927574457757],
    [0.0009039636772332247, 0.0821376497701719, 0.9169583865525949, 0.00011215213987777151],
    [0.0009039636772332247, 0.9169583865525949, 0.0821376497701719, 0.00011215213987777151],
    [0.0821376497701719, 0.0009039636772332247, 0.9169583865525949, 0.00011215213987777151],
    [0.0821376497701719, 0.9169583865525949, 0.0009039636772332247, 0.00011215213987777151],
    [0.9169583865525949, 0.0009039636772332247, 0.0821376497701719, 0.00011215213987777151],
    [0.9169583865525949, 0.0821376497701719, 0.0009039636772332247, 0.00011215213987777151],
    [0.012636810198760173, 0.012636810198760173, 0.9747263796024797, 9.676716277052653e-05],
    [0.012636810198760173, 0.9747263796024797, 0.012636810198760173, 9.676716277052653e-05],
    [0.9747263796024797, 0.012636810198760173, 0.012636810198760173, 9.676716277052653e-05],
    [0.009230644496615578, 0.01604297590090477, 0.9747263796024797, 9.317886617052568e-05],
    [0.009230644496615578, 0.9747263796024797, 0.01604297590090477, 9.317886617052568e-05],
    [0.01604297590090477, 0.009230644496615578, 0.9747263796024797, 9.317886617052568e-05],
    [0.01604297590090477, 0.9747263796024797, 0.009230644496615578, 9.317886617052568e-05],
    [0.9747263796024797, 0.009230644496615578, 0.01604297590090477, 9.317886617052568e-05],
    [0.9747263796024797, 0.01604297590090477, 0.009230644496615578, 9.317886617052568e-05],
    [0.006077090939062605, 0.01919652945845774, 0.9747263796024797, 8.268019346168865e-05],
    [0.006077090939062605, 0.9747263796024797, 0.01919652945845774, 8.268019346168865e-05],
    [0.01919652945845774, 0.006077090939062605, 0.9747263796024797, 8.268019346168865e-05],
    [0.01919652945845774, 0.9747263796024797, 0.006077090939062605, 8.268019346168865e-05],
    [0.9747263796024797, 0.006077090939062605, 0.01919652945845774, 8.268019346168865e-05],
    [0.9747263796024797, 0.01919652945845774, 0.006077090939062605, 8.268019346168865e-05],
    [0.0034100178880768317, 0.021863602509443514, 0.9747263796024797, 6.605026813848557e-05],
    [0.0034100178880768317, 0.9747263796024797, 0.021863602509443514, 6.605026813848557e-05],
    [0.021863602509443514, 0.0034100178880768317, 0.9747263796024797, 6.605026813848557e-05],
    [0.021863602509443514, 0.9747263796024797, 0.0034100178880768317, 6.605026813848557e-05],
    [0.9747263796024797, 0.0034100178880768317, 0.021863602509443514, 6.605026813848557e-05],
    [0.9747263796024797, 0.021863602509443514, 0.0034100178880768317, 6.605026813848557e-05],
    [0.0014271684910719927, 0.023846451906448355, 0.9747263796024797, 4.452524389112793e-05],
    [0.0014271684910719927, 0.9747263796024797, 0.023846451906448355, 4.452524389112793e-05],
    [0.023846451906448355, 0.0014271684910719927, 0.9747263796024797, 4.452524389112793e-05],
    [0.023846451906448355, 0.9747263796024797, 0.0014271684910719927, 4.452524389112793e-05],
    [0.9747263796024797, 0.0014271684910719927, 0.023846451906448355, 4.452524389112793e-05],
    [0.9747263796024797, 0.023846451906448355, 0.0014271684910719927, 4.452524389112793e-05],
    [0.00027512031478060144, 0.024998500082739745, 0.9747263796024797, 1.9737611367753875e-05],
    [0.00027512031478060144, 0.9747263796024797, 0.024998500082739745, 1.9737611367753875e-05],
    [0.024998500082739745, 0.00027512031478060144, 0.9747263796024797, 1.9737611367753875e-05],
    [0.024998500082739745, 0.9747263796024797, 0.00027512031478060144, 1.9737611367753875e-05],
    [0.9747263796024797, 0.00027512031478060144, 0.024998500082739745, 1.9737611367753875e-05],
    [0.9747263796024797, 0.024998500082739745, 0.00027512031478060144, 1.9737611367753875e-05],
];

pub(crate) static RULE_D20: [[f64; 4]; 432] = [
    [0.29538088426258025, 0.30818863108564276, 0.396430484651777, 0.0064526026017239285],
    [0.29538088426258025, 0.396430484651777, 0.30818863108564276, 0.0064526026017239285],
    [0.30818863108564276, 0.29538088426258025, 0.396430484651777, 0.0064526026017239285],
    [0.30818863108564276, 0.396430484651777, 0.29538088426258025, 0.0064526026017239285],
    [0.396430484651777, 0.29538088426258025, 0.30818863108564276, 0.0064526026017239285],
    [0.396430484651777, 0.30818863108564276, 0.29538088426258025, 0.0064526026017239285],
    [0.19215105452985398, 0.3533396342332619, 0.45450931123688415, 0.006386187130273055],
    [0.19215105452985398, 0.45450931123688415, 0.3533396342332619, 0.006386187130273055],
    [0.3533396342332619, 0.19215105452985398, 0.45450931123688415, 0.006386187130273055],
    [0.3533396342332619, 0.45450931123688415, 0.19215105452985398, 0.006386187130273055],
    [0.45450931123688415, 0.19215105452985398, 0.3533396342332619, 0.006386187130273055],
    [0.45450931123688415, 0.3533396342332619, 0.19215105452985398, 0.006386187130273055],
    [0.22271900508647624, 0.29538088426258025, 0.4819001106509435, 0.006047170030981993],
    [0.22271900508647624, 0.4819001106509435, 0.29538088426258025, 0.006047170030981993],
    [0.29538088426258025, 0.22271900508647624, 0.4819001106509435, 0.006047170030981993],
    [0.29538088426258025, 0.4819001106509435, 0.22271900508647624, 0.006047170030981993],
    [0.4819001106509435, 0.22271900508647624, 0.29538088426258025, 0.006047170030981993],
    [0.4819001106509435, 0.29538088426258025, 0.22271900508647624, 0.006047170030981993],
    [0.19215105452985398, 0.2553483284468816, 0.5525006170232645, 0.005984927603648261],
    [0.19215105452985398, 0.5525006170232645, 0.2553483284468816, 0.005984927603648261],
    [0.2553483284468816, 0.19215105452985398, 0.5525006170232645, 0.005984927603648261],
    [0.2553483284468816, 0.5525006170232645, 0.19215105452985398, 0.005984927603648261],
    [0.5525006170232645, 0.19215105452985398, 0.2553483284468816, 0.005984927603648261],
    [0.5525006170232645, 0.2553483284468816, 0.19215105452985398, 0.005984927603648261],
    [0.25781773507677486, 0.3316371837217674, 0.4105450812014577, 0.005822511648112331],
    [0.25781773507677486, 0.4105450812014577, 0.3316371837217674, 0.005822511648112331],
    [0.3316371837217674, 0.25781773507677486, 0.4105450812014577, 0.005822511648112331],
    [0.3316371837217674, 0.4105450812014577, 0.25781773507677486, 0.005822511648112331],
    [0.4105450812014577, 0.25781773507677486, 0.3316371837217674, 0.005822511648112331],
    [0.4105450812014577, 0.3316371837217674, 0.25781773507677486, 0.005822511648112331],
    [0.10685449088347665, 0.39064692635657494, 0.5024985827599484, 0.0055316250499552215],
    [0.10685449088347665, 0.5024985827599484, 0.39064692635657494, 0.0055316250499552215],
    [0.39064692635657494, 0.10685449088347665, 0.5024985827599484, 0.0055316250499552215],
    [0.39064692635657494, 0.5024985827599484, 0.10685449088347665, 0.0055316250499552215],
    [0.5024985827599484, 0.10685449088347665, 0.39064692635657494, 0.0055316250499552215],
    [0.5024985827599484, 0.39064692635657494, 0.10685449088347665, 0.0055316250499552215],
    [0.18631741621251197, 0.4031375025860303, 0.4105450812014577, 0.005456669210358866],
    [0.18631741621251197, 0.4105450812014577, 0.4031375025860303, 0.005456669210358866],
    [0.4031375025860303, 0.18631741621251197, 0.4105450812014577, 0.005456669210358866],
    [0.4031375025860303, 0.4105450812014577, 0.18631741621251197, 0.005456669210358866],
    [0.4105450812014577, 0.18631741621251197, 0.4031375025860303, 0.005456669210358866],
    [0.4105450812014577, 0.4031375025860303, 0.18631741621251197, 0.005456669210358866],
    [0.14539182906563652, 0.29538088426258025, 0.5592272866717832, 0.005261786917757171],
    [0.14539182906563652, 0.5592272866717832, 0.29538088426258025, 0.005261786917757171],
    [0.29538088426258025, 0.14539182906563652, 0.5592272866717832, 0.005261786917757171],
    [0.29538088426258025, 0.5592272866717832, 0.14539182906563652, 0.005261786917757171],
    [0.5592272866717832, 0.14539182906563652, 0.29538088426258025, 0.005261786917757171],
    [0.5592272866717832, 0.29538088426258025, 0.14539182906563652, 0.005261786917757171],
    [0.16669237772200934, 0.19215105452985398, 0.6411565677481368, 0.0052076282967499655],
    [0.16669237772200934, 0.6411565677481368, 0.19215105452985398, 0.0052076282967499655],
    [0.19215105452985398, 0.16669237772200934, 0.6411565677481368, 0.0052076282967499655],
    [0.19215105452985398, 0.6411565677481368, 0.16669237772200934, 0.0052076282967499655],
    [0.6411565677481368, 0.16669237772200934, 0.19215105452985398, 0.0052076282967499655],
    [0.6411565677481368, 0.19215105452985398, 0.16669237772200934, 0.0052076282967499655],
    [0.10685449088347665, 0.2823092288373499, 0.6108362802791735, 0.005184059718133198],
    [0.10685449088347665, 0.6108362802791735, 0.2823092288373499, 0.005184059718133198],
    [0.2823092288373499, 0.10685449088347665, 0.6108362802791735, 0.005184059718133198],
    [0.2823092288373499, 0.6108362802791735, 0.10685449088347665, 0.005184059718133198],
    [0.6108362802791735, 0.10685449088347665, 0.2823092288373499, 0.005184059718133198],
    [0.6108362802791735, 0.2823092288373499, 0.10685449088347665, 0.005184059718133198],
    [0.1216287308727991, 0.4105450812014577, 0.46782618792574315, 0.004747978065523676],
    [0.1216287308727991, 0.46782618792574315, 0.4105450812014577, 0.004747978065523676],
    [0.4105450812014577, 0.1216287308727991, 0.46782618792574315, 0.004747978065523676],
    [0.4105450812014577, 0.46782618792574315, 0.1216287308727991, 0.004747978065523676],
    [0.46782618792574315, 0.1216287308727991, 0.4105450812014577, 0.004747978065523676],
    [0.46782618792574315, 0.4105450812014577, 0.1216287308727991, 0.004747978065523676],
    [0.20515426339360845, 0.2638948872935739, 0.5309508493128177, 0.0047017239711339975],
    [0.20515426339360845, 0.5309508493128177, 0.2638948872935739, 0.0047017239711339975],
    [0.2638948872935739, 0.20515426339360845, 0.5309508493128177, 0.0047017239711339975],
    [0.2638948872935739, 0.5309508493128177, 0.20515426339360845, 0.0047017239711339975],
    [0.5309508493128177, 0.20515426339360845, 0.2638948872935739, 0.0047017239711339975],
    [0.5309508493128177, 0.2638948872935739, 0.20515426339360845, 0.0047017239711339975],
    [0.10685449088347665, 0.1842925579109637, 0.7088529512055597, 0.004510774042402053],
    [0.10685449088347665, 0.7088529512055597, 0.1842925579109637, 0.004510774042402053],
    [0.1842925579109637, 0.10685449088347665, 0.7088529512055597, 0.004510774042402053],
    [0.1842925579109637, 0.7088529512055597, 0.10685449088347665, 0.004510774042402053],
    [0.7088529512055597, 0.10685449088347665, 0.1842925579109637, 0.004510774042402053],
    [0.7088529512055597, 0.1842925579109637, 0.10685449088347665, 0.004510774042402053],
    [0.1482590492430464, 0.32079010144413594, 0.5309508493128177, 0.00440630332396342],
    [0.1482590492430464, 0.5309508493128177, 0.32079010144413594, 0.00440630332396342],
    [0.32079010144413594, 0.1482590492430464, 0.5309508493128177, 0.00440630332396342],
    [0.32079010144413594, 0.5309508493128177, 0.1482590492430464, 0.00440630332396342],
    [0.5309508493128177, 0.1482590492430464, 0.32079010144413594, 0.00440630332396342],
    [0.5309508493128177, 0.32079010144413594, 0.1482590492430464, 0.00440630332396342],
    [0.081065487121377, 0.29538088426258025, 0.6235536286160428, 0.0041458321766015],
    [0.081065487121377, 0.6235536286160428, 0.29538088426258025, 0.0041458321766015],
    [0.29538088426258025, 0.081065487121377, 0.6235536286160428, 0.0041458321766015],
    [0.29538088426258025, 0.6235536286160428, 0.081065487121377, 0.0041458321766015],
    [0.6235536286160428, 0.081065487121377, 0.29538088426258025, 0.0041458321766015],
    [0.6235536286160428, 0.29538088426258025, 0.081065487121377, 0.0041458321766015],
    [0.0929419410038158, 0.19215105452985398, 0.7149070044663303, 0.004103159875894244],
    [0.0929419410038158, 0.7149070044663303, 0.19215105452985398, 0.004103159875894244],
    [0.19215105452985398, 0.0929419410038158, 0.7149070044663303, 0.004103159875894244],
    [0.19215105452985398, 0.7149070044663303, 0.0929419410038158, 0.004103159875894244],
    [0.7149070044663303, 0.0929419410038158, 0.19215105452985398, 0.004103159875894244],
    [0.7149070044663303, 0.19215105452985398, 0.0929419410038158, 0.004103159875894244],
    [0.04444646315540768, 0.4179431552051773, 0.5376103816394151, 0.003938836403395442],
    [0.04444646315540768, 0.5376103816394151, 0.4179431552051773, 0.003938836403395442],
    [0.4179431552051773, 0.04444646315540768, 0.5376103816394151, 0.003938836403395442],
    [0.4179431552051773, 0.5376103816394151, 0.04444646315540768, 0.003938836403395442],
    [0.5376103816394151, 0.04444646315540768, 0.4179431552051773, 0.003938836403395442],
    [0.5376103816394151, 0.4179431552051773, 0.04444646315540768, 0.003938836403395442],
    [0.09678408152285552, 0.37226506916432683, 0.5309508493128177, 0.003834029648069226],
    [0.09678408152285552, 0.5309508493128177, 0.37226506916432683, 0.003834029648069226],
    [0.37226506916432683, 0.09678408152285552, 0.5309508493128177, 0.003834029648069226],
    [0.37226506916432683, 0.5309508493128177, 0.09678408152285552, 0.003834029648069226],
    [0.5309508493128177, 0.09678408152285552, 0.37226506916432683, 0.003834029648069226],
    [0.5309508493128177, 0.37226506916432683, 0.09678408152285552, 0.003834029648069226],
    [0.06781600024927893, 0.4105450812014577, 0.5216389185492634, 0.0037409953206992675],
    [0.06781600024927893, 0.5216389185492634, 0.4105450812014577, 0.0037409953206992675],
    [0.4105450812014577, 0.06781600024927893, 0.5216389185492634, 0.0037409953206992675],
    [0.4105450812014577, 0.5216389185492634, 0.06781600024927893, 0.0037409953206992675],
    [0.5216389185492634, 0.06781600024927893, 0.4105450812014577, 0.0037409953206992675],
    [0.5216389185492634, 0.4105450812014577, 0.06781600024927893, 0.0037409953206992675],
    [0.04444646315540768, 0.30203542350701656, 0.6535181133375758, 0.003691349820487968],
    [0.04444646315540768, 0.6535181133375758, 0.30203542350701656, 0.003691349820487968],
    [0.30203542350701656, 0.04444646315540768, 0.6535181133375758, 0.003691349820487968],
    [0.30203542350701656, 0.6535181133375758, 0.04444646315540768, 0.003691349820487968],
    [0.6535181133375758, 0.04444646315540768, 0.30203542350701656, 0.003691349820487968],
    [0.6535181133375758, 0.30203542350701656, 0.04444646315540768, 0.003691349820487968],
    [0.10275519660153914, 0.10685449088347665, 0.7903903125149843, 0.0035540991033404454],
    [0.10275519660153914, 0.7903903125149843, 0.10685449088347665, 0.0035540991033404454],
    [0.10685449088347665, 0.10275519660153914, 0.7903903125149843, 0.0035540991033404454],
    [0.10685449088347665, 0.7903903125149843, 0.10275519660153914, 0.0035540991033404454],
    [0.7903903125149843, 0.10275519660153914, 0.10685449088347665, 0.0035540991033404454],
    [0.7903903125149843, 0.10685449088347665, 0.10275519660153914, 0.0035540991033404454],
    [0.1532588224083817, 0.1971405273143633, 0.649600650277255, 0.003359470006448106],
    [0.1532588224083817, 0.649600650277255, 0.1971405273143633, 0.003359470006448106],
    [0.1971405273143633, 0.1532588224083817, 0.649600650277255, 0.003359470006448106],
    [0.1971405273143633, 0.649600650277255, 0.1532588224083817, 0.003359470006448106],
    [0.649600650277255, 0.1532588224083817, 0.1971405273143633, 0.003359470006448106],
    [0.649600650277255, 0.1971405273143633, 0.1532588224083817, 0.003359470006448106],
    [0.04444646315540768, 0.1971698941868422, 0.7583836426577502, 0.003211931547285231],
    [0.04444646315540768, 0.7583836426577502, 0.1971698941868422, 0.003211931547285231],
    [0.1971698941868422, 0.04444646315540768, 0.7583836426577502, 0.003211931547285231],
    [0.1971698941868422, 0.7583836426577502, 0.04444646315540768, 0.003211931547285231],
    [0.7583836426577502, 0.04444646315540768, 0.1971698941868422, 0.003211931547285231],
    [0.7583836426577502, 0.1971698941868422, 0.04444646315540768, 0.003211931547285231],
    [0.11075571583312008, 0.23964363388962492, 0.649600650277255, 0.003148386410399469],
    [0.11075571583312008, 0.649600650277255, 0.23964363388962492, 0.003148386410399469],
    [0.23964363388962492, 0.11075571583312008, 0.649600650277255, 0.003148386410399469],
    [0.23964363388962492, 0.649600650277255, 0.11075571583312008, 0.003148386410399469],
    [0.649600650277255, 0.11075571583312008, 0.23964363388962492, 0.003148386410399469],
    [0.649600650277255, 0.23964363388962492, 0.11075571583312008, 0.003148386410399469],
    [0.053963477622276636, 0.4150856730649057, 0.5309508493128177, 0.0030208831580327174],
    [0.053963477622276636, 0.5309508493128177, 0.4150856730649057, 0.0030208831580327174],
    [0.4150856730649057, 0.053963477622276636, 0.5309508493128177, 0.0030208831580327174],
    [0.4150856730649057, 0.5309508493128177, 0.053963477622276636, 0.0030208831580327174],
    [0.5309508493128177, 0.053963477622276636, 0.4150856730649057, 0.0030208831580327174],
    [0.5309508493128177, 0.4150856730649057, 0.053963477622276636, 0.0030208831580327174],
    [0.03378040701535688, 0.29538088426258025, 0.6708387087220629, 0.0027695972508572204],
    [0.03378040701535688, 0.6708387087220629, 0.29538088426258025, 0.0027695972508572204],
    [0.29538088426258025, 0.03378040701535688, 0.6708387087220629, 0.0027695972508572204],
    [0.29538088426258025, 0.6708387087220629, 0.03378040701535688, 0.0027695972508572204],
    [0.6708387087220629, 0.03378040701535688, 0.29538088426258025, 0.0027695972508572204],
    [0.6708387087220629, 0.29538088426258025, 0.03378040701535688, 0.0027695972508572204],
    [0.03872938666494815, 0.19215105452985398, 0.7691195588051979, 0.0027410902873111344],
    [0.03872938666494815, 0.7691195588051979, 0.19215105452985398, 0.0027410902873111344],
    [0.19215105452985398, 0.03872938666494815, 0.7691195588051979, 0.0027410902873111344],
    [0.19215105452985398, 0.7691195588051979, 0.03872938666494815, 0.0027410902873111344],
    [0.7691195588051979, 0.03872938666494815, 0.19215105452985398, 0.0027410902873111344],
    [0.7691195588051979, 0.19215105452985398, 0.03872938666494815, 0.0027410902873111344],
    [0.07230176023011069, 0.2780975894926343, 0.649600650277255, 0.002739486130108736],
    [0.07230176023011069, 0.649600650277255, 0.2780975894926343, 0.002739486130108736],
    [0.2780975894926343, 0.07230176023011069, 0.649600650277255, 0.002739486130108736],
    [0.2780975894926343, 0.649600650277255, 0.07230176023011069, 0.002739486130108736],
    [0.649600650277255, 0.07230176023011069, 0.2780975894926343, 0.002739486130108736],
    [0.649600650277255, 0.2780975894926343, 0.07230176023011069, 0.002739486130108736],
    [0.04444646315540768, 0.10993515674605732, 0.845618380098535, 0.0025307237571400047],
    [0.04444646315540768, 0.845618380098535, 0.10993515674605732, 0.0025307237571400047],
    [0.10993515674605732, 0.04444646315540768, 0.845618380098535, 0.0025307237571400047],
    [0.10993515674605732, 0.845618380098535, 0.04444646315540768, 0.0025307237571400047],
    [0.845618380098535, 0.04444646315540768, 0.10993515674605732, 0.0025307237571400047],
    [0.845618380098535, 0.10993515674605732, 0.04444646315540768, 0.0025307237571400047],
    [0.028259277430161614, 0.4105450812014577, 0.5611956413683806, 0.002499148521774408],
    [0.028259277430161614, 0.5611956413683806, 0.4105450812014577, 0.002499148521774408],
    [0.4105450812014577, 0.028259277430161614, 0.5611956413683806, 0.002499148521774408],
    [0.4105450812014577, 0.5611956413683806, 0.028259277430161614, 0.002499148521774408],
    [0.5611956413683806, 0.028259277430161614, 0.4105450812014577, 0.002499148521774408],
    [0.5611956413683806, 0.4105450812014577, 0.028259277430161614, 0.002499148521774408],
    [0.04281862093724069, 0.10685449088347665, 0.8503268881792827, 0.002374293672918243],
    [0.04281862093724069, 0.8503268881792827, 0.10685449088347665, 0.002374293672918243],
    [0.10685449088347665, 0.04281862093724069, 0.8503268881792827, 0.002374293672918243],
    [0.10685449088347665, 0.8503268881792827, 0.04281862093724069, 0.002374293672918243],
    [0.8503268881792827, 0.04281862093724069, 0.10685449088347665, 0.002374293672918243],
    [0.8503268881792827, 0.10685449088347665, 0.04281862093724069, 0.002374293672918243],
    [0.04031297666762911, 0.3100863730551159, 0.649600650277255, 0.00215847770407233],
    [0.04031297666762911, 0.649600650277255, 0.3100863730551159, 0.00215847770407233],
    [0.3100863730551159, 0.04031297666762911, 0.649600650277255, 0.00215847770407233],
    [0.3100863730551159, 0.649600650277255, 0.04031297666762911, 0.00215847770407233],
    [0.649600650277255, 0.04031297666762911, 0.3100863730551159, 0.00215847770407233],
    [0.649600650277255, 0.3100863730551159, 0.04031297666762911, 0.00215847770407233],
    [0.10514743000003748, 0.1352536804747355, 0.759598889525227, 0.0020659921161057413],
    [0.10514743000003748, 0.759598889525227, 0.1352536804747355, 0.0020659921161057413],
    [0.1352536804747355, 0.10514743000003748, 0.759598889525227, 0.0020659921161057413],
    [0.1352536804747355, 0.759598889525227, 0.10514743000003748, 0.0020659921161057413],
    [0.759598889525227, 0.10514743000003748, 0.1352536804747355, 0.0020659921161057413],
    [0.759598889525227, 0.1352536804747355, 0.10514743000003748, 0.0020659921161057413],
    [0.022486859732492818, 0.4465622909546895, 0.5309508493128177, 0.0020180820962479823],
    [0.022486859732492818, 0.5309508493128177, 0.4465622909546895, 0.0020180820962479823],
    [0.4465622909546895, 0.022486859732492818, 0.5309508493128177, 0.0020180820962479823],
    [0.4465622909546895, 0.5309508493128177, 0.022486859732492818, 0.0020180820962479823],
    [0.5309508493128177, 0.022486859732492818, 0.4465622909546895, 0.0020180820962479823],
    [0.5309508493128177, 0.4465622909546895, 0.022486859732492818, 0.0020180820962479823],
    [0.07598700482400507, 0.16441410565076792, 0.759598889525227, 0.0019361808528890146],
    [0.07598700482400507, 0.759598889525227, 0.16441410565076792, 0.0019361808528890146],
    [0.16441410565076792, 0.07598700482400507, 0.759598889525227, 0.0019361808528890146],
    [0.16441410565076792, 0.759598889525227, 0.07598700482400507, 0.0019361808528890146],
    [0.759598889525227, 0.07598700482400507, 0.16441410565076792, 0.0019361808528890146],
    [0.759598889525227, 0.16441410565076792, 0.07598700482400507, 0.0019361808528890146],
    [0.008539054988427386, 0.4336484557308856, 0.5578124892806869, 0.0017992453626408033],
    [0.008539054988427386, 0.5578124892806869, 0.4336484557308856, 0.0017992453626408033],
    [0.4336484557308856, 0.008539054988427386, 0.5578124892806869, 0.0017992453626408033],
    [0.4336484557308856, 0.5578124892806869, 0.008539054988427386, 0.0017992453626408033],
    [0.5578124892806869, 0.008539054988427386, 0.4336484557308856, 0.0017992453626408033],
    [0.5578124892806869, 0.4336484557308856, 0.008539054988427386, 0.0017992453626408033],
    [0.04444646315540768, 0.04581054739877805, 0.9097429894458142, 0.0016906341747290967],
    [0.04444646315540768, 0.9097429894458142, 0.04581054739877805, 0.0016906341747290967],
    [0.04581054739877805, 0.04444646315540768, 0.9097429894458142, 0.0016906341747290967],
    [0.04581054739877805, 0.9097429894458142, 0.04444646315540768, 0.0016906341747290967],
    [0.9097429894458142, 0.04444646315540768, 0.04581054739877805, 0.0016906341747290967],
    [0.9097429894458142, 0.04581054739877805, 0.04444646315540768, 0.0016906341747290967],
    [0.008539054988427386, 0.3133851897049068, 0.6780757553066658, 0.0016861944407420837],
    [0.008539054988427386, 0.6780757553066658, 0.3133851897049068, 0.0016861944407420837],
    [0.3133851897049068, 0.008539054988427386, 0.6780757553066658, 0.0016861944407420837],
    [0.3133851897049068, 0.6780757553066658, 0.008539054988427386, 0.0016861944407420837],
    [0.6780757553066658, 0.008539054988427386, 0.3133851897049068, 0.0016861944407420837],
    [0.6780757553066658, 0.3133851897049068, 0.008539054988427386, 0.0016861944407420837],
    [0.04960461103124909, 0.1907964994435239, 0.759598889525227, 0.0016847171536350798],
    [0.04960461103124909, 0.759598889525227, 0.1907964994435239, 0.0016847171536350798],
    [0.1907964994435239, 0.04960461103124909, 0.759598889525227, 0.0016847171536350798],
    [0.1907964994435239, 0.759598889525227, 0.04960461103124909, 0.0016847171536350798],
    [0.759598889525227, 0.04960461103124909, 0.1907964994435239, 0.0016847171536350798],
    [0.759598889525227, 0.1907964994435239, 0.04960461103124909, 0.0016847171536350798],
    [0.008539054988427386, 0.2045790655161496, 0.786881879495423, 0.00146719801223297],
    [0.008539054988427386, 0.786881879495423, 0.2045790655161496, 0.00146719801223297],
    [0.2045790655161496, 0.008539054988427386, 0.786881879495423, 0.00146719801223297],
    [0.2045790655161496, 0.786881879495423, 0.008539054988427386, 0.00146719801223297],
    [0.786881879495423, 0.008539054988427386, 0.2045790655161496, 0.00146719801223297],
    [0.786881879495423, 0.2045790655161496, 0.008539054988427386, 0.00146719801223297],
    [0.016798625508709152, 0.33360072421403586, 0.649600650277255, 0.0014419575276044634],
    [0.016798625508709152, 0.649600650277255, 0.33360072421403586, 0.0014419575276044634],
    [0.33360072421403586, 0.016798625508709152, 0.649600650277255, 0.0014419575276044634],
    [0.33360072421403586, 0.649600650277255, 0.016798625508709152, 0.0014419575276044634],
    [0.649600650277255, 0.016798625508709152, 0.33360072421403586, 0.0014419575276044634],
    [0.649600650277255, 0.33360072421403586, 0.016798625508709152, 0.0014419575276044634],
    [0.027657826320482394, 0.21274328415429059, 0.759598889525227, 0.001327411142485025],
    [0.027657826320482394, 0.759598889525227, 0.21274328415429059, 0.001327411142485025],
    [0.21274328415429059, 0.027657826320482394, 0.759598889525227, 0.001327411142485025],
    [0.21274328415429059, 0.759598889525227, 0.027657826320482394, 0.001327411142485025],
    [0.759598889525227, 0.027657826320482394, 0.21274328415429059, 0.001327411142485025],
    [0.759598889525227, 0.21274328415429059, 0.027657826320482394, 0.001327411142485025],
    [0.006496364795917774, 0.29538088426258025, 0.698122750941502, 0.0012217832939218972],
    [0.006496364795917774, 0.698122750941502, 0.29538088426258025, 0.0012217832939218972],
    [0.29538088426258025, 0.006496364795917774, 0.698122750941502, 0.0012217832939218972],
    [0.29538088426258025, 0.698122750941502, 0.006496364795917774, 0.0012217832939218972],
    [0.698122750941502, 0.006496364795917774, 0.29538088426258025, 0.0012217832939218972],
    [0.698122750941502, 0.29538088426258025, 0.006496364795917774, 0.0012217832939218972],
    [0.007448111089463093, 0.19215105452985398, 0.800400834380683, 0.0012092076994702965],
    [0.007448111089463093, 0.800400834380683, 0.19215105452985398, 0.0012092076994702965],
    [0.19215105452985398, 0.007448111089463093, 0.800400834380683, 0.0012092076994702965],
    [0.19215105452985398, 0.800400834380683, 0.007448111089463093, 0.0012092076994702965],
    [0.800400834380683, 0.007448111089463093, 0.19215105452985398, 0.0012092076994702965],
    [0.800400834380683, 0.19215105452985398, 0.007448111089463093, 0.0012092076994702965],
    [0.008539054988427386, 0.11406625604397519, 0.8773946889675974, 0.0011560249062981768],
    [0.008539054988427386, 0.8773946889675974, 0.11406625604397519, 0.0011560249062981768],
    [0.11406625604397519, 0.008539054988427386, 0.8773946889675974, 0.0011560249062981768],
    [0.11406625604397519, 0.8773946889675974, 0.008539054988427386, 0.0011560249062981768],
    [0.8773946889675974, 0.008539054988427386, 0.11406625604397519, 0.0011560249062981768],
    [0.8773946889675974, 0.11406625604397519, 0.008539054988427386, 0.0011560249062981768],
    [0.005434587421398365, 0.4105450812014577, 0.5840203313771439, 0.0011024772327415154],
    [0.005434587421398365, 0.5840203313771439, 0.4105450812014577, 0.0011024772327415154],
    [0.4105450812014577, 0.005434587421398365, 0.5840203313771439, 0.0011024772327415154],
    [0.4105450812014577, 0.5840203313771439, 0.005434587421398365, 0.0011024772327415154],
    [0.5840203313771439, 0.005434587421398365, 0.4105450812014577, 0.0011024772327415154],
    [0.5840203313771439, 0.4105450812014577, 0.005434587421398365, 0.0011024772327415154],
    [0.008234518356749864, 0.10685449088347665, 0.8849109907597735, 0.0010473986221419447],
    [0.008234518356749864, 0.8849109907597735, 0.10685449088347665, 0.0010473986221419447],
    [0.10685449088347665, 0.008234518356749864, 0.8849109907597735, 0.0010473986221419447],
    [0.10685449088347665, 0.8849109907597735, 0.008234518356749864, 0.0010473986221419447],
    [0.8849109907597735, 0.008234518356749864, 0.10685449088347665, 0.0010473986221419447],
    [0.8849109907597735, 0.10685449088347665, 0.008234518356749864, 0.0010473986221419447],
    [0.06361628776571214, 0.08183116846935191, 0.854552543764936, 0.0010327983151741684],
    [0.06361628776571214, 0.854552543764936, 0.08183116846935191, 0.0010327983151741684],
    [0.08183116846935191, 0.06361628776571214, 0.854552543764936, 0.0010327983151741684],
    [0.08183116846935191, 0.854552543764936, 0.06361628776571214, 0.0010327983151741684],
    [0.854552543764936, 0.06361628776571214, 0.08183116846935191, 0.0010327983151741684],
    [0.854552543764936, 0.08183116846935191, 0.06361628776571214, 0.0010327983151741684],
    [0.04597365019132412, 0.09947380604373993, 0.854552543764936, 0.0009679051082273886],
    [0.04597365019132412, 0.854552543764936, 0.09947380604373993, 0.0009679051082273886],
    [0.09947380604373993, 0.04597365019132412, 0.854552543764936, 0.0009679051082273886],
    [0.09947380604373993, 0.854552543764936, 0.04597365019132412, 0.0009679051082273886],
    [0.854552543764936, 0.04597365019132412, 0.09947380604373993, 0.0009679051082273886],
    [0.854552543764936, 0.09947380604373993, 0.04597365019132412, 0.0009679051082273886],
    [0.004324484422893327, 0.464724666264289, 0.5309508493128177, 0.000890259040441898],
    [0.004324484422893327, 0.5309508493128177, 0.464724666264289, 0.000890259040441898],
    [0.464724666264289, 0.004324484422893327, 0.5309508493128177, 0.000890259040441898],
    [0.464724666264289, 0.5309508493128177, 0.004324484422893327, 0.000890259040441898],
    [0.5309508493128177, 0.004324484422893327, 0.464724666264289, 0.000890259040441898],
    [0.5309508493128177, 0.464724666264289, 0.004324484422893327, 0.000890259040441898],
    [0.011525159021952912, 0.22887595145282005, 0.759598889525227, 0.0008867687099668011],
    [0.011525159021952912, 0.759598889525227, 0.22887595145282005, 0.0008867687099668011],
    [0.22887595145282005, 0.011525159021952912, 0.759598889525227, 0.0008867687099668011],
    [0.22887595145282005, 0.759598889525227, 0.011525159021952912, 0.0008867687099668011],
    [0.759598889525227, 0.011525159021952912, 0.22887595145282005, 0.0008867687099668011],
    [0.759598889525227, 0.22887595145282005, 0.011525159021952912, 0.0008867687099668011],
    [0.030011776891446955, 0.11543567934361709, 0.854552543764936, 0.0008421973270154899],
    [0.030011776891446955, 0.854552543764936, 0.11543567934361709, 0.0008421973270154899],
    [0.11543567934361709, 0.030011776891446955, 0.854552543764936, 0.0008421973270154899],
    [0.11543567934361709, 0.854552543764936, 0.030011776891446955, 0.0008421973270154899],
    [0.854552543764936, 0.030011776891446955, 0.11543567934361709, 0.0008421973270154899],
    [0.854552543764936, 0.11543567934361709, 0.030011776891446955, 0.0008421973270154899],
    [0.008539054988427386, 0.0475319978046157, 0.9439289472069569, 0.0007722752070081339],
    [0.008539054988427386, 0.9439289472069569, 0.0475319978046157, 0.0007722752070081339],
    [0.0475319978046157, 0.008539054988427386, 0.9439289472069569, 0.0007722752070081339],
    [0.0475319978046157, 0.9439289472069569, 0.008539054988427386, 0.0007722752070081339],
    [0.9439289472069569, 0.008539054988427386, 0.0475319978046157, 0.0007722752070081339],
    [0.9439289472069569, 0.0475319978046157, 0.008539054988427386, 0.0007722752070081339],
    [0.00880990058135924, 0.04444646315540768, 0.9467436362632331, 0.000745808290421332],
    [0.00880990058135924, 0.9467436362632331, 0.04444646315540768, 0.000745808290421332],
    [0.04444646315540768, 0.00880990058135924, 0.9467436362632331, 0.000745808290421332],
    [0.04444646315540768, 0.9467436362632331, 0.00880990058135924, 0.000745808290421332],
    [0.9467436362632331, 0.00880990058135924, 0.04444646315540768, 0.000745808290421332],
    [0.9467436362632331, 0.04444646315540768, 0.00880990058135924, 0.000745808290421332],
    [0.016733535362464573, 0.12871392087259947, 0.854552543764936, 0.0006635785203702027],
    [0.016733535362464573, 0.854552543764936, 0.12871392087259947, 0.0006635785203702027],
    [0.12871392087259947, 0.016733535362464573, 0.854552543764936, 0.0006635785203702027],
    [0.12871392087259947, 0.854552543764936, 0.016733535362464573, 0.0006635785203702027],
    [0.854552543764936, 0.016733535362464573, 0.12871392087259947, 0.0006635785203702027],
    [0.854552543764936, 0.12871392087259947, 0.016733535362464573, 0.0006635785203702027],
    [0.0032305708846247154, 0.3471687788381203, 0.649600650277255, 0.000636106790338116],
    [0.0032305708846247154, 0.649600650277255, 0.3471687788381203, 0.000636106790338116],
    [0.3471687788381203, 0.0032305708846247154, 0.649600650277255, 0.000636106790338116],
    [0.3471687788381203, 0.649600650277255, 0.0032305708846247154, 0.000636106790338116],
    [0.649600650277255, 0.0032305708846247154, 0.3471687788381203, 0.000636106790338116],
    [0.649600650277255, 0.3471687788381203, 0.0032305708846247154, 0.000636106790338116],
    [0.006972950578876617, 0.13847450565618744, 0.854552543764936, 0.00044329947944293503],
    [0.006972950578876617, 0.854552543764936, 0.13847450565618744, 0.00044329947944293503],
    [0.13847450565618744, 0.006972950578876617, 0.854552543764936, 0.00044329947944293503],
    [0.13847450565618744, 0.854552543764936, 0.006972950578876617, 0.00044329947944293503],
    [0.854552543764936, 0.006972950578876617, 0.13847450565618744, 0.00044329947944293503],
    [0.854552543764936, 0.13847450565618744, 0.006972950578876617, 0.00044329947944293503],
    [0.002216422001769596, 0.23818468847300336, 0.759598889525227, 0.0003911901613401637],
    [0.002216422001769596, 0.759598889525227, 0.23818468847300336, 0.0003911901613401637],
    [0.23818468847300336, 0.002216422001769596, 0.759598889525227, 0.0003911901613401637],
    [0.23818468847300336, 0.759598889525227, 0.002216422001769596, 0.0003911901613401637],
    [0.759598889525227, 0.002216422001769596, 0.23818468847300336, 0.0003911901613401637],
    [0.759598889525227, 0.23818468847300336, 0.002216422001769596, 0.0003911901613401637],
    [0.03107953793763419, 0.0399783607979548, 0.928942101264411, 0.0003691369104997272],
    [0.03107953793763419, 0.928942101264411, 0.0399783607979548, 0.0003691369104997272],
    [0.0399783607979548, 0.03107953793763419, 0.928942101264411, 0.0003691369104997272],
    [0.0399783607979548, 0.928942101264411, 0.03107953793763419, 0.0003691369104997272],
    [0.928942101264411, 0.03107953793763419, 0.0399783607979548, 0.0003691369104997272],
    [0.928942101264411, 0.0399783607979548, 0.03107953793763419, 0.0003691369104997272],
    [0.0224602826640082, 0.048597616071580786, 0.928942101264411, 0.00034594314887869456],
    [0.0224602826640082, 0.928942101264411, 0.048597616071580786, 0.00034594314887869456],
    [0.048597616071580786, 0.0224602826640082, 0.928942101264411, 0.00034594314887869456],
    [0.048597616071580786, 0.928942101264411, 0.0224602826640082, 0.00034594314887869456],
    [0.928942101264411, 0.0224602826640082, 0.048597616071580786, 0.00034594314887869456],
    [0.928942101264411, 0.048597616071580786, 0.0224602826640082, 0.00034594314887869456],
    [0.008539054988427386, 0.009140955497580884, 0.9823199895139917, 0.00034068236670171926],
    [0.008539054988427386, 0.9823199895139917, 0.009140955497580884, 0.00034068236670171926],
    [0.009140955497580884, 0.008539054988427386, 0.9823199895139917, 0.00034068236670171926],
    [0.009140955497580884, 0.9823199895139917, 0.008539054988427386, 0.00034068236670171926],
    [0.9823199895139917, 0.008539054988427386, 0.009140955497580884, 0.00034068236670171926],
    [0.9823199895139917, 0.009140955497580884, 0.008539054988427386, 0.00034068236670171926],
    [0.01466215950714862, 0.056395739228440364, 0.928942101264411, 0.00030101338737486156],
    [0.01466215950714862, 0.928942101264411, 0.056395739228440364, 0.00030101338737486156],
    [0.056395739228440364, 0.01466215950714862, 0.928942101264411, 0.00030101338737486156],
    [0.056395739228440364, 0.928942101264411, 0.01466215950714862, 0.00030101338737486156],
    [0.928942101264411, 0.01466215950714862, 0.056395739228440364, 0.00030101338737486156],
    [0.928942101264411, 0.056395739228440364, 0.01466215950714862, 0.00030101338737486156],
    [0.008175116238215463, 0.06288278249737353, 0.928942101264411, 0.00023717246754234776],
    [0.008175116238215463, 0.928942101264411, 0.06288278249737353, 0.00023717246754234776],
    [0.06288278249737353, 0.008175116238215463, 0.928942101264411, 0.00023717246754234776],
    [0.06288278249737353, 0.928942101264411, 0.008175116238215463, 0.00023717246754234776],
    [0.928942101264411, 0.008175116238215463, 0.06288278249737353, 0.00023717246754234776],
    [0.928942101264411, 0.06288278249737353, 0.008175116238215463, 0.00023717246754234776],
    [0.001340979421701321, 0.14410647681336272, 0.854552543764936, 0.00019555763857723922],
    [0.001340979421701321, 0.854552543764936, 0.14410647681336272, 0.00019555763857723922],
    [0.14410647681336272, 0.001340979421701321, 0.854552543764936, 0.00019555763857723922],
    [0.14410647681336272, 0.854552543764936, 0.001340979421701321, 0.00019555763857723922],
    [0.854552543764936, 0.001340979421701321, 0.14410647681336272, 0.00019555763857723922],
    [0.854552543764936, 0.14410647681336272, 0.001340979421701321, 0.00019555763857723922],
    [0.0034066131436586208, 0.06765128559193037, 0.928942101264411, 0.00015844158328250842],
    [0.0034066131436586208, 0.928942101264411, 0.06765128559193037, 0.00015844158328250842],
    [0.06765128559193037, 0.0034066131436586208, 0.928942101264411, 0.00015844158328250842],
    [0.06765128559193037, 0.928942101264411, 0.0034066131436586208, 0.00015844158328250842],
    [0.928942101264411, 0.0034066131436586208, 0.06765128559193037, 0.00015844158328250842],
    [0.928942101264411, 0.06765128559193037, 0.0034066131436586208, 0.00015844158328250842],
    [0.0006551312922225558, 0.07040276744336643, 0.928942101264411, 6.989510097801703e-05],
    [0.0006551312922225558, 0.928942101264411, 0.07040276744336643, 6.989510097801703e-05],
    [0.07040276744336643, 0.0006551312922225558, 0.928942101264411, 6.989510097801703e-05],
    [0.07040276744336643, 0.928942101264411, 0.0006551312922225558, 6.989510097801703e-05],
    [0.928942101264411, 0.0006551312922225558, 0.07040276744336643, 6.989510097801703e-05],
    [0.928942101264411, 0.07040276744336643, 0.0006551312922225558, 6.989510097801703e-05],
    [0.009430886250525685, 0.012131176915324724, 0.9784379368341496, 6.437812010459432e-05],
    [0.009430886250525685, 0.9784379368341496, 0.012131176915324724, 6.437812010459432e-05],
    [0.012131176915324724, 0.009430886250525685, 0.9784379368341496, 6.437812010459432e-05],
    [0.012131176915324724, 0.9784379368341496, 0.009430886250525685, 6.437812010459432e-05],
    [0.9784379368341496, 0.009430886250525685, 0.012131176915324724, 6.437812010459432e-05],
    [0.9784379368341496, 0.012131176915324724, 0.009430886250525685, 6.437812010459432e-05],
    [0.006815428575031104, 0.014746634590819305, 0.9784379368341496, 6.03330876820854e-05],
    [0.006815428575031104, 0.9784379368341496, 0.014746634590819305, 6.03330876820854e-05],
    [0.014746634590819305, 0.006815428575031104, 0.9784379368341496, 6.03330876820854e-05],
    [0.014746634590819305, 0.9784379368341496, 0.006815428575031104, 6.03330876820854e-05],
    [0.9784379368341496, 0.006815428575031104, 0.014746634590819305, 6.03330876820854e-05],
    [0.9784379368341496, 0.014746634590819305, 0.006815428575031104, 6.03330876820854e-05],
    [0.00444913816854216, 0.017112924997308248, 0.9784379368341496, 5.249725902315026e-05],
    [0.00444913816854216, 0.9784379368341496, 0.017112924997308248, 5.249725902315026e-05],
    [0.017112924997308248, 0.00444913816854216, 0.9784379368341496, 5.249725902315026e-05],
    [0.017112924997308248, 0.9784379368341496, 0.00444913816854216, 5.249725902315026e-05],
    [0.9784379368341496, 0.00444913816854216, 0.017112924997308248, 5.249725902315026e-05],
    [0.9784379368341496, 0.017112924997308248, 0.00444913816854216, 5.249725902315026e-05],
    [0.0024806865366578316, 0.019081376629192577, 0.9784379368341496, 4.1363291414759637e-05],
    [0.0024806865366578316, 0.9784379368341496, 0.019081376629192577, 4.1363291414759637e-05],
    [0.019081376629192577, 0.0024806865366578316, 0.9784379368341496, 4.1363291414759637e-05],
    [0.019081376629192577, 0.9784379368341496, 0.0024806865366578316, 4.1363291414759637e-05],
    [0.9784379368341496, 0.0024806865366578316, 0.019081376629192577, 4.1363291414759637e-05],
    [0.9784379368341496, 0.019081376629192577, 0.0024806865366578316, 4.1363291414759637e-05],
    [0.0010337148873274316, 0.020528348278522977, 0.9784379368341496, 2.7632488076889152e-05],
    [0.0010337148873274316, 0.9784379368341496, 0.020528348278522977, 2.7632488076889152e-05],
    [0.020528348278522977, 0.0010337148873274316, 0.9784379368341496, 2.7632488076889152e-05],
    [0.020528348278522977, 0.9784379368341496, 0.0010337148873274316, 2.7632488076889152e-05],
    [0.9784379368341496, 0.0010337148873274316, 0.020528348278522977, 2.7632488076889152e-05],
    [0.9784379368341496, 0.020528348278522977, 0.0010337148873274316, 2.7632488076889152e-05],
    [0.00019879538455522925, 0.02136326778129518, 0.9784379368341496, 1.2189827344531705e-05],
    [0.00019879538455522925, 0.9784379368341496, 0.02136326778129518, 1.2189827344531705e-05],
    [0.02136326778129518, 0.00019879538455522925, 0.9784379368341496, 1.2189827344531705e-05],
    [0.02136326778129518, 0.9784379368341496, 0.00019879538455522925, 1.2189827344531705e-05],
    [0.9784379368341496, 0.00019879538455522925, 0.02136326778129518, 1.2189827344531705e-05],
    [0.9784379368341496, 0.02136326778129518, 0.00019879538455522925, 1.2189827344531705e-05],
];

/// (exactness degree, table) pairs in ascending degree order.
pub(crate) static LADDER: [(usize, &[[f64; 4]]); 13] = [
    (1, &RULE_D01),
    (2, &RULE_D02),
    (4, &RULE_D04),
    (5, &RULE_D05),
    (6, &RULE_D06),
    (7, &RULE_D07),
    (9, &RULE_D09),
    (11, &RULE_D11),
    (13, &RULE_D13),
    (15, &RULE_D15),
    (17, &RULE_D17),
    (19, &RULE_D19),
    (20, &RULE_D20),
];
