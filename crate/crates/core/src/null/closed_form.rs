//! Closed-form cumulants `κ_1 … κ_4` of the limiting null law `Z_{∞,a}`.
//!
//! The expressions are radical-rational functions of `a`. Their long
//! polynomial factors are sums `Σ c_k a^{k/2}` and are kept below as
//! coefficient tables `(numerator, denominator, k)` with the rational
//! coefficients exactly as derived by computer algebra.

use std::f64::consts::PI;

/// One term `(num / den) · a^{k/2}`.
type HalfPowerTerm = (f64, f64, i32);

fn half_power_sum(sqrt_a: f64, terms: &[HalfPowerTerm]) -> f64 {
    terms
        .iter()
        .map(|&(num, den, k)| num / den * sqrt_a.powi(k))
        .sum()
}

pub fn kappa1(a: f64) -> f64 {
    let s1 = (a + 1.0).sqrt();
    let num = 2.0 * a.powf(2.5) - 2.0 * s1 * a * a + 4.0 * a.powf(1.5) - 3.0 * s1 * a - s1;
    -0.5 * PI.sqrt() * num / ((a + 1.0).powf(1.5) * a.powf(1.5))
}

pub fn kappa2(a: f64) -> f64 {
    let r = a.sqrt();
    let bracket = half_power_sum(r, K2_POLY) + half_power_sum(r, K2_OVER_SQRT_A2) / (a + 2.0).sqrt()
        - half_power_sum(r, K2_OVER_Q2) / (4.0 * a * a + 8.0 * a + 3.0).sqrt();
    PI * bracket
        / ((a + 2.0).powi(2) * (a + 1.5).powi(2) * (a + 1.0).powi(3) * (a + 0.5).powi(2))
}

pub fn kappa3(a: f64) -> f64 {
    let r = a.sqrt();
    let q2 = (4.0 * a * a + 8.0 * a + 3.0).sqrt();
    let s23 = (2.0 * a + 3.0).sqrt();
    let q = 2.0 * a * a + 4.0 * a + 1.0;
    let h = a * a + 2.0 * a + 0.5;
    let prefactor = 16.0 * PI.powf(1.5)
        / (h.powi(3)
            * (a + 0.5).powi(2)
            * (a + 1.5).powi(3)
            * q2
            * s23
            * q.sqrt()
            * (a + 1.0).powf(4.5)
            * a.powf(3.5));
    let inner = -5_935_392.0 * s23 * q2 * half_power_sum(r, K3_P1)
        + s23 * half_power_sum(r, K3_P2)
        + 4096.0
            * (a + 0.5).powi(3)
            * (a + 1.0).powf(4.5)
            * (2.0 * a + 1.0).sqrt()
            * h.powi(3)
            * half_power_sum(r, K3_POLY);
    let tail = -4_772_427.0 * q2 * 2.0_f64.sqrt() * s23 / 512.0 * half_power_sum(r, K3_P3);
    prefactor * (q.sqrt() / 4096.0 * inner + tail)
}

pub fn kappa4(a: f64) -> f64 {
    let r = a.sqrt();
    let f1 = a * a + 2.5 * a + 1.25;
    let f2 = a * a + 2.0 * a + 0.5;
    let f3 = a * a + 1.5 * a + 0.25;
    let c3 = (2.0 * a.powi(3) + 6.0 * a * a + 5.0 * a + 1.0).sqrt();
    let p2 = (a * a + 3.0 * a + 2.0).sqrt();
    let q2 = (4.0 * a * a + 8.0 * a + 3.0).sqrt();
    let q3 = (4.0 * a.powi(3) + 12.0 * a * a + 11.0 * a + 3.0).sqrt();
    let q4 = (16.0 * a.powi(4) + 64.0 * a.powi(3) + 84.0 * a * a + 40.0 * a + 5.0).sqrt();
    let sa1 = (a + 1.0).sqrt();
    let sa2 = (a + 2.0).sqrt();

    let prefactor = 48.0 * PI * PI
        / (f1.powi(5)
            * (a + 0.5).powi(5)
            * (a + 2.0).powi(4)
            * f2.powi(3)
            * f3.powi(5)
            * (a + 1.0).powi(6)
            * (a + 1.5).powi(5)
            * c3
            * p2
            * a.powf(4.5));

    let t1 = -15_888_388_972_237.0 * q3 * q2 * c3 * q4 / 67_108_864.0
        * (sa1 * half_power_sum(r, K4_S1) * p2
            + 73_701_960_223_245.0 * sa2 / 63_553_555_888_948.0 * half_power_sum(r, K4_S2));
    let t2 = (241_982_982_129_125.0 * sa2 * q2 * q3 / 4_294_967_296.0 * half_power_sum(r, K4_S3)
        - 386_109_436_024_375.0 * p2 / 536_870_912.0
            * (half_power_sum(r, K4_S4) + half_power_sum(r, K4_S5) * q2))
        * c3;
    let t3 = 11_799_584_447_520_125.0 * q2 * 2.0_f64.sqrt() * q3 * sa2 * sa1 / 17_179_869_184.0
        * half_power_sum(r, K4_S6);
    let t4 = (a + 0.5).powi(5)
        * half_power_sum(r, K4_POLY)
        * f1.powi(5)
        * (2.0 * a * a + 4.0 * a + 1.0).sqrt()
        * f2.powi(3)
        * f3.powi(5)
        * (a + 1.0).powi(2)
        * (a + 1.5).powi(5);
    prefactor * (t1 + t2 + t3 + t4)
}

const K2_POLY: &[HalfPowerTerm] = &[
    (9.0, 1.0, 0),
    (66.0, 1.0, 2),
    (799.0, 4.0, 4),
    (1323.0, 4.0, 6),
    (2681.0, 8.0, 8),
    (216.0, 1.0, 10),
    (87.0, 1.0, 12),
    (20.0, 1.0, 14),
    (2.0, 1.0, 16),
];

const K2_OVER_SQRT_A2: &[HalfPowerTerm] = &[
    (27.0, 32.0, -5),
    (315.0, 32.0, -3),
    (429.0, 8.0, -1),
    (719.0, 4.0, 1),
    (13045.0, 32.0, 3),
    (20729.0, 32.0, 5),
    (5817.0, 8.0, 7),
    (4575.0, 8.0, 9),
    (615.0, 2.0, 11),
    (215.0, 2.0, 13),
    (22.0, 1.0, 15),
    (2.0, 1.0, 17),
];

const K2_OVER_Q2: &[HalfPowerTerm] = &[
    (60.0, 1.0, 0),
    (416.0, 1.0, 2),
    (1295.0, 1.0, 4),
    (2377.0, 1.0, 6),
    (2835.0, 1.0, 8),
    (2277.0, 1.0, 10),
    (1230.0, 1.0, 12),
    (430.0, 1.0, 14),
    (88.0, 1.0, 16),
    (8.0, 1.0, 18),
];

const K3_P1: &[HalfPowerTerm] = &[
    (3.0, 41218.0, 7),
    (117.0, 82436.0, 9),
    (1007.0, 82436.0, 11),
    (45691.0, 741924.0, 13),
    (37834.0, 185481.0, 15),
    (175337.0, 370962.0, 17),
    (49256.0, 61827.0, 19),
    (1.0, 1.0, 21),
    (58384.0, 61827.0, 23),
    (124090.0, 185481.0, 25),
    (64900.0, 185481.0, 27),
    (24256.0, 185481.0, 29),
    (6112.0, 185481.0, 31),
    (928.0, 185481.0, 33),
    (64.0, 185481.0, 35),
];

const K3_P2: &[HalfPowerTerm] = &[
    (4320.0, 1.0, 7),
    (82080.0, 1.0, 9),
    (694176.0, 1.0, 11),
    (3487008.0, 1.0, 13),
    (11732544.0, 1.0, 15),
    (28261824.0, 1.0, 17),
    (50733120.0, 1.0, 19),
    (69467904.0, 1.0, 21),
    (73348224.0, 1.0, 23),
    (59750400.0, 1.0, 25),
    (37211904.0, 1.0, 27),
    (17370624.0, 1.0, 29),
    (5872128.0, 1.0, 31),
    (1354752.0, 1.0, 33),
    (190464.0, 1.0, 35),
    (12288.0, 1.0, 37),
];

const K3_POLY: &[HalfPowerTerm] = &[
    (15.0, 32.0, 0),
    (21.0, 16.0, 2),
    (27.0, 8.0, 4),
    (11.0, 2.0, 6),
    (4.0, 1.0, 8),
    (1.0, 1.0, 10),
];

const K3_P3: &[HalfPowerTerm] = &[
    (189.0, 1156952.0, 7),
    (30321.0, 12726472.0, 9),
    (207081.0, 12726472.0, 11),
    (881383.0, 12726472.0, 13),
    (327552.0, 1590809.0, 15),
    (1442591.0, 3181618.0, 17),
    (2429741.0, 3181618.0, 19),
    (1.0, 1.0, 21),
    (1627996.0, 1590809.0, 23),
    (1297344.0, 1590809.0, 25),
    (795456.0, 1590809.0, 27),
    (367232.0, 1590809.0, 29),
    (11200.0, 144619.0, 31),
    (1664.0, 93577.0, 33),
    (3968.0, 1590809.0, 35),
    (256.0, 1590809.0, 37),
];

const K4_S1: &[HalfPowerTerm] = &[
    (2418660.0, 15888388972237.0, 9),
    (108093420.0, 15888388972237.0, 11),
    (2332420110.0, 15888388972237.0, 13),
    (32404982280.0, 15888388972237.0, 15),
    (1304640003889.0, 63553555888948.0, 17),
    (10148404334297.0, 63553555888948.0, 19),
    (1.0, 1.0, 21),
    (82389179722704.0, 15888388972237.0, 23),
    (1444270220426605.0, 63553555888948.0, 25),
    (5432365877003493.0, 63553555888948.0, 27),
    (8873302935379397.0, 31776777944474.0, 29),
    (25411446550103755.0, 31776777944474.0, 31),
    (32130704968678825.0, 15888388972237.0, 33),
    (72157365052385701.0, 15888388972237.0, 35),
    (144535729392983458.0, 15888388972237.0, 37),
    (259076456429254198.0, 15888388972237.0, 39),
    (416552354601936792.0, 15888388972237.0, 41),
    (601727316318085656.0, 15888388972237.0, 43),
    (781693114431576816.0, 15888388972237.0, 45),
    (913594901408998032.0, 15888388972237.0, 47),
    (960527932076785920.0, 15888388972237.0, 49),
    (21115219451189760.0, 369497417959.0, 51),
    (770871902940374400.0, 15888388972237.0, 53),
    (586996844600676480.0, 15888388972237.0, 55),
    (400118395950180864.0, 15888388972237.0, 57),
    (243542217879163392.0, 15888388972237.0, 59),
    (131966188294238208.0, 15888388972237.0, 61),
    (63417825270829056.0, 15888388972237.0, 63),
    (26902928333987840.0, 15888388972237.0, 65),
    (10016986656268288.0, 15888388972237.0, 67),
    (3250400705183744.0, 15888388972237.0, 69),
    (911030547578880.0, 15888388972237.0, 71),
    (218077726638080.0, 15888388972237.0, 73),
    (43933586817024.0, 15888388972237.0, 75),
    (7304351055872.0, 15888388972237.0, 77),
    (975356035072.0, 15888388972237.0, 79),
    (100514398208.0, 15888388972237.0, 81),
    (7501512704.0, 15888388972237.0, 83),
    (8388608.0, 369497417959.0, 85),
    (8388608.0, 15888388972237.0, 87),
];

const K4_S2: &[HalfPowerTerm] = &[
    (644976.0, 4913464014883.0, 9),
    (29469888.0, 4913464014883.0, 11),
    (650803608.0, 4913464014883.0, 13),
    (9263307304.0, 4913464014883.0, 15),
    (1434259933009.0, 73701960223245.0, 17),
    (3817681446062.0, 24567320074415.0, 19),
    (1.0, 1.0, 21),
    (393110274779764.0, 73701960223245.0, 23),
    (1773826939317421.0, 73701960223245.0, 25),
    (6876636097430098.0, 73701960223245.0, 27),
    (23178971747762287.0, 73701960223245.0, 29),
    (22856499656988768.0, 24567320074415.0, 31),
    (11956380864994854.0, 4913464014883.0, 33),
    (417152280084258104.0, 73701960223245.0, 35),
    (866772377781476636.0, 73701960223245.0, 37),
    (1614448743288950624.0, 73701960223245.0, 39),
    (540503048824952792.0, 14740392044649.0, 41),
    (1357706227893363264.0, 24567320074415.0, 43),
    (1844560574332883296.0, 24567320074415.0, 45),
    (2260384021120766464.0, 24567320074415.0, 47),
    (2498830444647711936.0, 24567320074415.0, 49),
    (498261964927452160.0, 4913464014883.0, 51),
    (447687023824409088.0, 4913464014883.0, 53),
    (362098332677613568.0, 4913464014883.0, 55),
    (1316153654067809792.0, 24567320074415.0, 57),
    (858214151772459008.0, 24567320074415.0, 59),
    (100135574979573760.0, 4913464014883.0, 61),
    (260512018086756352.0, 24567320074415.0, 63),
    (361283014419267584.0, 73701960223245.0, 65),
    (49226553320341504.0, 24567320074415.0, 67),
    (17689849815269376.0, 24567320074415.0, 69),
    (16645725011050496.0, 73701960223245.0, 71),
    (903286619373568.0, 14740392044649.0, 73),
    (1048045253820416.0, 73701960223245.0, 75),
    (204951751491584.0, 73701960223245.0, 77),
    (11039609454592.0, 24567320074415.0, 79),
    (286898782208.0, 4913464014883.0, 81),
    (432063643648.0, 73701960223245.0, 83),
    (31448891392.0, 73701960223245.0, 85),
    (1476395008.0, 73701960223245.0, 87),
    (33554432.0, 73701960223245.0, 89),
];

const K4_S3: &[HalfPowerTerm] = &[
    (32400.0, 1935863857033.0, 9),
    (2160000.0, 1935863857033.0, 11),
    (68682600.0, 1935863857033.0, 13),
    (1388405400.0, 1935863857033.0, 15),
    (20067723385.0, 1935863857033.0, 17),
    (221172245710.0, 1935863857033.0, 19),
    (1.0, 1.0, 21),
    (13839308388342.0, 1935863857033.0, 23),
    (824829361875297.0, 19358638570330.0, 25),
    (2081596612710102.0, 9679319285165.0, 27),
    (225198237739750229.0, 241982982129125.0, 29),
    (168771272531369632.0, 48396596425825.0, 31),
    (552080771887033714.0, 48396596425825.0, 33),
    (7935831986201000696.0, 241982982129125.0, 35),
    (4032572610721320364.0, 48396596425825.0, 37),
    (9097014341614307008.0, 48396596425825.0, 39),
    (91456134448134851632.0, 241982982129125.0, 41),
    (32883798565740245888.0, 48396596425825.0, 43),
    (264962795071741033024.0, 241982982129125.0, 45),
    (383500451258021994496.0, 241982982129125.0, 47),
    (499256744973609739264.0, 241982982129125.0, 49),
    (585163120864498180096.0, 241982982129125.0, 51),
    (617790924040639606784.0, 241982982129125.0, 53),
    (23501677425911791616.0, 9679319285165.0, 55),
    (503148655054716305408.0, 241982982129125.0, 57),
    (77530781171012009984.0, 48396596425825.0, 59),
    (268353384686546747392.0, 241982982129125.0, 61),
    (166605364226116550656.0, 241982982129125.0, 63),
    (740354924891209728.0, 1935863857033.0, 65),
    (9170715202355724288.0, 48396596425825.0, 67),
    (20189169394128519168.0, 241982982129125.0, 69),
    (7862451184013934592.0, 241982982129125.0, 71),
    (2692695772327051264.0, 241982982129125.0, 73),
    (805192554923425792.0, 241982982129125.0, 75),
    (208355953949540352.0, 241982982129125.0, 77),
    (46128149280325632.0, 241982982129125.0, 79),
    (8609490215632896.0, 241982982129125.0, 81),
    (1328326413123584.0, 241982982129125.0, 83),
    (32972128387072.0, 48396596425825.0, 85),
    (15815143325696.0, 241982982129125.0, 87),
    (1100316934144.0, 241982982129125.0, 89),
    (49392123904.0, 241982982129125.0, 91),
    (1073741824.0, 241982982129125.0, 93),
];

const K4_S4: &[HalfPowerTerm] = &[
    (-18720.0, 617775097639.0, 9),
    (-174720.0, 88253585377.0, 11),
    (-38138960.0, 617775097639.0, 13),
    (-756947760.0, 617775097639.0, 15),
    (-10758989058.0, 617775097639.0, 17),
    (-116854259524.0, 617775097639.0, 19),
    (-5052981011802.0, 3088875488195.0, 21),
    (-35806380491592.0, 3088875488195.0, 23),
    (-1061623519833274.0, 15444377440975.0, 25),
    (-5353814148669156.0, 15444377440975.0, 27),
    (-581443725209867406.0, 386109436024375.0, 29),
    (-2198447109494797632.0, 386109436024375.0, 31),
    (-7296425515279897524.0, 386109436024375.0, 33),
    (-21405868799083127328.0, 386109436024375.0, 35),
    (-55835065962877271824.0, 386109436024375.0, 37),
    (-130113321129467042688.0, 386109436024375.0, 39),
    (-271954859321968227744.0, 386109436024375.0, 41),
    (-511484786629896684992.0, 386109436024375.0, 43),
    (-867861901016544200352.0, 386109436024375.0, 45),
    (-1331143346975602002432.0, 386109436024375.0, 47),
    (-1848456566020192628672.0, 386109436024375.0, 49),
    (-2326262930245559023104.0, 386109436024375.0, 51),
    (-2654886604198704375552.0, 386109436024375.0, 53),
    (-392622223567954968576.0, 55158490860625.0, 55),
    (-2580351736494166597632.0, 386109436024375.0, 57),
    (-2196055362565462155264.0, 386109436024375.0, 59),
    (-1692713927754382053376.0, 386109436024375.0, 61),
    (-1180180835631042134016.0, 386109436024375.0, 63),
    (-21229402741482749952.0, 11031698172125.0, 65),
    (-84304887466191880192.0, 77221887204875.0, 67),
    (-214901751061628780544.0, 386109436024375.0, 69),
    (-19627491529479684096.0, 77221887204875.0, 71),
    (-1599308948797128704.0, 15444377440975.0, 73),
    (-2892470402622160896.0, 77221887204875.0, 75),
    (-4616904135234551808.0, 386109436024375.0, 77),
    (-7378867027181568.0, 2206339634425.0, 79),
    (-313552794399277056.0, 386109436024375.0, 81),
    (-65342235671003136.0, 386109436024375.0, 83),
    (-460544930742272.0, 15444377440975.0, 85),
    (-1681779270352896.0, 386109436024375.0, 87),
    (-39628321062912.0, 77221887204875.0, 89),
    (-3617973075968.0, 77221887204875.0, 91),
    (-171530256384.0, 55158490860625.0, 93),
    (-51539607552.0, 386109436024375.0, 95),
    (-1073741824.0, 386109436024375.0, 97),
];

const K4_S5: &[HalfPowerTerm] = &[
    (10800.0, 617775097639.0, 9),
    (713520.0, 617775097639.0, 11),
    (22493400.0, 617775097639.0, 13),
    (64439680.0, 88253585377.0, 15),
    (6473344595.0, 617775097639.0, 17),
    (70913863773.0, 617775097639.0, 19),
    (1.0, 1.0, 21),
    (22013701833097.0, 3088875488195.0, 23),
    (26208105471852.0, 617775097639.0, 25),
    (3309922453293424.0, 15444377440975.0, 27),
    (71847624095850058.0, 77221887204875.0, 29),
    (1353904109355641646.0, 386109436024375.0, 31),
    (7146557038684388.0, 617775097639.0, 33),
    (12987588438897780244.0, 386109436024375.0, 35),
    (33474782549507146248.0, 386109436024375.0, 37),
    (76842283296113132568.0, 386109436024375.0, 39),
    (157715599116006339888.0, 386109436024375.0, 41),
    (290355193731959736432.0, 386109436024375.0, 43),
    (480706690484033150464.0, 386109436024375.0, 45),
    (143425519049003786752.0, 77221887204875.0, 47),
    (193088395545537371904.0, 77221887204875.0, 49),
    (1174120309805297830656.0, 386109436024375.0, 51),
    (1290647472597674001408.0, 386109436024375.0, 53),
    (256513948672423369728.0, 77221887204875.0, 55),
    (1151926764144741052416.0, 386109436024375.0, 57),
    (934445814340112560128.0, 386109436024375.0, 59),
    (683913887836570927104.0, 386109436024375.0, 61),
    (450927587008642531328.0, 386109436024375.0, 63),
    (38185865328657891328.0, 55158490860625.0, 65),
    (142095030781925720064.0, 386109436024375.0, 67),
    (67525511518112448512.0, 386109436024375.0, 69),
    (28574379833515835392.0, 386109436024375.0, 71),
    (17145576324857856.0, 617775097639.0, 73),
    (3540684493395329024.0, 386109436024375.0, 75),
    (146183491321593856.0, 55158490860625.0, 77),
    (256349979600224256.0, 386109436024375.0, 79),
    (11006602781917184.0, 77221887204875.0, 81),
    (9975401333915648.0, 386109436024375.0, 83),
    (1496880726933504.0, 386109436024375.0, 85),
    (180938852007936.0, 386109436024375.0, 87),
    (3385507971072.0, 77221887204875.0, 89),
    (164282499072.0, 55158490860625.0, 91),
    (50465865728.0, 386109436024375.0, 93),
    (1073741824.0, 386109436024375.0, 95),
];

const K4_S6: &[HalfPowerTerm] = &[
    (2494800.0, 94396675580161.0, 9),
    (153522000.0, 94396675580161.0, 11),
    (4508001000.0, 94396675580161.0, 13),
    (84261705600.0, 94396675580161.0, 15),
    (1128542725445.0, 94396675580161.0, 17),
    (11559938854395.0, 94396675580161.0, 19),
    (1.0, 1.0, 21),
    (632454534820939.0, 94396675580161.0, 23),
    (17755948088155402.0, 471983377900805.0, 25),
    (84918717349357034.0, 471983377900805.0, 27),
    (8759154059363803308.0, 11799584447520125.0, 29),
    (6299684566265892228.0, 2359916889504025.0, 31),
    (99549118197334017808.0, 11799584447520125.0, 33),
    (55679266648601820368.0, 2359916889504025.0, 35),
    (692768130919254100736.0, 11799584447520125.0, 37),
    (308188896351346168064.0, 2359916889504025.0, 39),
    (3075111890856037819648.0, 11799584447520125.0, 41),
    (5521874557177178040576.0, 11799584447520125.0, 43),
    (8942511036426673245184.0, 11799584447520125.0, 45),
    (2616724871911485932544.0, 2359916889504025.0, 47),
    (3462982744024769019904.0, 2359916889504025.0, 49),
    (20742701122730313433088.0, 11799584447520125.0, 51),
    (22501362691630829371392.0, 11799584447520125.0, 53),
    (4420323669413709512704.0, 2359916889504025.0, 55),
    (19647944888437401321472.0, 11799584447520125.0, 57),
    (15795271654708880736256.0, 11799584447520125.0, 59),
    (11468876539243907776512.0, 11799584447520125.0, 61),
    (7508997058376752955392.0, 11799584447520125.0, 63),
    (4423768165953499561984.0, 11799584447520125.0, 65),
    (2338874529100001705984.0, 11799584447520125.0, 67),
    (1106158108427488854016.0, 11799584447520125.0, 69),
    (93225084226451275776.0, 2359916889504025.0, 71),
    (174166628281696124928.0, 11799584447520125.0, 73),
    (57363506280532017152.0, 11799584447520125.0, 75),
    (3306593531203682304.0, 2359916889504025.0, 77),
    (4132075315205767168.0, 11799584447520125.0, 79),
    (177063682063204352.0, 2359916889504025.0, 81),
    (160212574372102144.0, 11799584447520125.0, 83),
    (24009421235421184.0, 11799584447520125.0, 85),
    (2899236068786176.0, 11799584447520125.0, 87),
    (54206782242816.0, 2359916889504025.0, 89),
    (3680786972672.0, 2359916889504025.0, 91),
    (807453851648.0, 11799584447520125.0, 93),
    (17179869184.0, 11799584447520125.0, 95),
];

const K4_POLY: &[HalfPowerTerm] = &[
    (105.0, 256.0, 0),
    (15.0, 4.0, 2),
    (141.0, 8.0, 4),
    (223.0, 4.0, 6),
    (2191.0, 16.0, 8),
    (272.0, 1.0, 10),
    (837.0, 2.0, 12),
    (937.0, 2.0, 14),
    (5833.0, 16.0, 16),
    (190.0, 1.0, 18),
    (63.0, 1.0, 20),
    (12.0, 1.0, 22),
    (1.0, 1.0, 24),
];
