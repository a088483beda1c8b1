// Generated by tests/tools/gen_reference_values.py; do not edit by hand.
// Reference values computed with 60-digit arithmetic, rounded to double.
#pragma once
#include <cstdint>

namespace refvals {

struct GDerivRef { int j; double s; double value; };
inline constexpr GDerivRef kGDeriv[] = {
    {0, -50, 0.02},
    {0, -20, 0.04999999989694232},
    {0, -8.5, 0.1176231213683517},
    {0, -4.5, 0.21975355632483504},
    {0, -3.9, 0.251220022706204},
    {0, -1, 0.6321205588285577},
    {0, -0.25, 0.8847968677143805},
    {0, 0.25, 1.136101666750966},
    {0, 2, 3.194528049465325},
    {0, 7.5, 240.93898859414176},
    {0, 8.5, 578.0904517998981},
    {0, 20, 24258259.720489513},
    {0, 50, 1.0369411057174145e+20},
    {1, -50, 0.0004},
    {1, -20, 0.002499999891789435},
    {1, -8.5, 0.013814076823451888},
    {1, -4.5, 0.04636545773035394},
    {1, -3.9, 0.0592251567334358},
    {1, -1, 0.26424111765711533},
    {1, -0.25, 0.42398433857190265},
    {1, 0.25, 0.5916949997471022},
    {1, 2, 2.0972640247326626},
    {1, 7.5, 208.9471234482562},
    {1, 8.5, 510.19745747049836},
    {1, 20, 23045346.784465037},
    {1, 50, 1.0162022836030662e+20},
    {2, -50, 1.6e-05},
    {2, -20, 0.00024999988612126235},
    {2, -8.5, 0.003226433562105074},
    {2, -4.5, 0.01813820420499235},
    {2, -3.9, 0.025181641543863386},
    {2, -1, 0.16060279414278839},
    {2, -0.25, 0.2766715762896016},
    {2, 0.25, 0.40254166877414843},
    {2, 2, 1.5972640247326626},
    {2, 7.5, 185.3530890079401},
    {2, 8.5, 458.161638277428},
    {2, 20, 21953725.09204301},
    {2, 50, 9.962930143732918e+19},
    {3, -50, 9.6e-07},
    {3, -20, 3.749987986050823e-05},
    {3, -8.5, 0.0011148038020358329},
    {3, -4.5, 0.009623470239274387},
    {3, -3.9, 0.014180259791227121},
    {3, -1, 0.11392894125692285},
    {3, -0.25, 0.20485578318959982},
    {3, 0.25, 0.30560164146118507},
    {3, 2, 1.2986320123663313},
    {3, 7.5, 166.93108632429906},
    {3, 8.5, 416.5039912313942},
    {3, 20, 20965201.006683063},
    {3, 50, 9.77163524855017e+19},
    {5, -50, 7.679999999999995e-09},
    {5, -20, 1.8748651709240093e-06},
    {5, -8.5, 0.00027057789701139044},
    {5, -4.5, 0.004293033959120288},
    {5, -3.9, 0.006801590003739866},
    {5, -1, 0.07130217810980316},
    {5, -0.25, 0.13458484267393364},
    {5, 0.25, 0.20659359931086263},
    {5, 2, 0.9513679876336687},
    {5, 7.5, 139.71071578002025},
    {5, 8.5, 353.38091025155506},
    {5, 20, 19241954.878201287},
    {5, 50, 9.410643033445132e+19},
    {10, -50, 7.431782399952064e-13},
    {10, -20, 1.7527179857040247e-08},
    {10, -8.5, 5.131441408600894e-05},
    {10, -4.5, 0.0015793003954103658},
    {10, -3.9, 0.0026847141884995427},
    {10, -1, 0.03646133462410727},
    {10, -0.25, 0.07230395318573221},
    {10, 0.25, 0.11434366226115085},
    {10, 2, 0.5748317309897233},
    {10, 7.5, 99.89468390906504},
    {10, 8.5, 257.7537696135196},
    {10, 20, 15986293.66343226},
    {10, 50, 8.616551080079707e+19},
    {31, -50, 3.52219521221918e-21},
    {31, -20, 1.549189749156239e-10},
    {31, -8.5, 8.535441373724531e-06},
    {31, -4.5, 0.0004016812823665681},
    {31, -3.9, 0.0007169630428584206},
    {31, -1, 0.011855150522183795},
    {31, -0.25, 0.02452326510753523},
    {31, 0.25, 0.03982403029742433},
    {31, 2, 0.21769221916482673},
    {31, 7.5, 45.99080864593862},
    {31, 8.5, 121.97526831749539},
    {31, 20, 9399297.23675155},
    {31, 50, 6.370307106756762e+19},
    {64, -50, 1.1049375558632035e-23},
    {64, -20, 4.5372796326298685e-11},
    {64, -8.5, 3.5918592802491356e-06},
    {64, -4.5, 0.0001833984856021868},
    {64, -3.9, 0.00033095201622826117},
    {64, -1, 0.005746735484790436},
    {64, -0.25, 0.01202710514041759},
    {64, 0.25, 0.01967968870498835},
    {64, 2, 0.1103328948711978},
    {64, 7.5, 24.973762564080705},
    {64, 8.5, 66.97188020461424},
    {64, 20, 5723570.23529436},
    {64, 50, 4.525529164883789e+19},
};

struct ScaledRef { int l; double s; double cap_p; double p; };
inline constexpr ScaledRef kScaled[] = {
    {1, -30, 0.033333333333239755, 0.0003536776512855367},
    {1, -8, 0.12466442479915875, 0.004866739222531841},
    {1, -3, 0.2809376368420774, 0.017815837946111877},
    {1, -1, 0.4180232931306736, 0.02525037919908682},
    {1, 0, 0.5, 0.026525823848649224},
    {1, 1, 0.5819767068693265, 0.02525037919908682},
    {1, 3, 0.7190623631579226, 0.017815837946111877},
    {1, 8, 0.8753355752008413, 0.004866739222531841},
    {1, 30, 0.9666666666667603, 0.0003536776512855367},
    {2, -30, 0.06666666666385938, 0.000707355301766845},
    {2, -8, 0.2473081719072472, 0.009195146432288632},
    {2, -3, 0.4801637221690272, 0.02008649259860811},
    {2, -1, 0.6077888088226672, 0.019654998584884863},
    {2, 0, 0.6666666666666666, 0.017683882565766147},
    {2, 1, 0.7182818284590452, 0.01512212537585194},
    {2, 3, 0.7968999868144385, 0.010064028398362401},
    {2, 8, 0.8928023760731071, 0.003471297372511043},
    {2, 30, 0.9678160919540196, 0.00032886554498157903},
    {4, -30, 0.1333333329122403, 0.0014147104846270236},
    {4, -8, 0.4701069864920846, 0.013662902557376901},
    {4, -3, 0.6982367910693883, 0.013081526149440633},
    {4, -1, 0.7709746346028802, 0.010009547348636745},
    {4, 0, 0.8, 0.00848826363156775},
    {4, 1, 0.8244701674557673, 0.007120042481265104},
    {4, 3, 0.8620166468883245, 0.004960181330549256},
    {4, 8, 0.9143567768424119, 0.0021757995742858706},
    {4, 30, 0.9698782381302606, 0.0002869250544609211},
    {5, -30, 0.1666666635084689, 0.001768387385329117},
    {5, -8, 0.5614123181172532, 0.013460613909662801},
    {5, -3, 0.7570947988032452, 0.010002950360936829},
    {5, -1, 0.8117618654725881, 0.007440726615485881},
    {5, 0, 0.8333333333333334, 0.006315672344916481},
    {5, 1, 0.8516006495948797, 0.00533903897948523},
    {5, 3, 0.8800938722931669, 0.003822128343659619},
    {5, 8, 0.9218324976238179, 0.0018089457664393432},
    {5, 30, 0.9708076348398549, 0.0002690707448120859},
    {30, -30, 0.8614593176838624, 0.0030308798697886185},
    {30, -8, 0.9577026229777087, 0.000511197069458272},
    {30, -3, 0.9645450476146751, 0.00037031877880749485},
    {30, -1, 0.9667379830218001, 0.00032885513637941516},
    {30, 0, 0.967741935483871, 0.00031052603360801637},
    {30, 1, 0.9686905422683721, 0.00029359798368127314},
    {30, 3, 0.970438101463977, 0.0002634367302818117},
    {30, 8, 0.9740891980712474, 0.00020492464080035808},
    {30, 30, 0.983335746253699, 8.688329816166187e-05},
    {50, -30, 0.9572103973451591, 0.0004932725373592844},
    {50, -8, 0.9769369214072559, 0.00016044313359629678},
    {50, -3, 0.9792194850613468, 0.00013154618034114652},
    {50, -1, 0.9800156563099164, 0.00012205322120846469},
    {50, 0, 0.9803921568627451, 0.00011767289436895228},
    {50, 1, 0.9807552503840465, 0.00011351555759270866},
    {50, 3, 0.9814438840996911, 0.00010581366573494659},
    {50, 8, 0.9829733786035882, 8.958098435790418e-05},
    {50, 30, 0.9875402309159698, 4.8636906425878074e-05},
};

struct K2Ref { int l; double r; double k2; };
inline constexpr K2Ref kTwoPoint[] = {
    {1, 0.05, 0.00499375},
    {1, 0.1, 0.0199},
    {1, 0.3, 0.1719},
    {1, 0.5, 0.4375},
    {1, 0.7, 0.7399},
    {1, 0.9, 0.9639},
    {2, 0.05, 0.00561796679443207},
    {2, 0.1, 0.02238737437344547},
    {2, 0.3, 0.19329218708268278},
    {2, 0.5, 0.48997813411078717},
    {2, 0.7, 0.8139347451938759},
    {2, 0.9, 0.9986041436446056},
    {5, 0.05, 0.008988699937790343},
    {5, 0.1, 0.03581678430125976},
    {5, 0.3, 0.3070025639445543},
    {5, 0.5, 0.735455320881423},
    {5, 0.7, 1.0092208509522713},
    {5, 0.9, 1.0019341641642943},
    {50, 0.05, 0.06488948328133996},
    {50, 0.1, 0.2553561484573169},
    {50, 0.3, 1.047755401700933},
    {50, 0.5, 1.0000645962368246},
    {50, 0.7, 1.000000000001261},
    {50, 0.9, 1.0},
    {1, 0.001, 1.999999e-06},
    {5, 0.001, 3.5999981999968e-06},
    {50, 0.001, 2.6009986991530553e-05},
    {2, 0.012, 0.0003239766716267251},
    {3, 0.02, 0.001066453295399823},
    {17, 0.00766, 0.0005591275215086313},
    {1000, 0.001, 0.0005010002217220152},
    {10000, 0.005, 0.12459075800606377},
    {10000, 0.01, 0.47362760982417196},
    {10000, 0.02, 1.0486584535557906},
    {7, 0.9999, 1.0},
};

struct HannayRef { double u; double k2; };
inline constexpr HannayRef kHannay[] = {
    {0.01, 4.999999997222222e-05},
    {0.05, 0.0012499995659723579},
    {0.2, 0.019998222364434694},
    {0.31, 0.04802535849919442},
    {0.32, 0.05117018946869644},
    {0.5, 0.12456732493472339},
    {1, 0.473553804032471},
    {2, 1.0486616541259672},
    {3, 1.0058041303781433},
    {6, 1.0000000000002676},
};

struct LnBinomRef { long long m; long long l; double value; };
inline constexpr LnBinomRef kLnBinom[] = {
    {0, 1, 0.0},
    {5, 1, 0.0},
    {3, 4, 2.995732273553991},
    {200, 30, 84.4694760901168},
    {100, 3, 8.546946149565585},
    {1000, 2, 6.90875477931522},
    {10000, 1000, 3344.2739303951207},
    {447, 17, 67.26965193088226},
    {10000, 1, 0.0},
    {1, 1000, 6.907755278982137},
};

struct FiniteNRef { int l; long long n; double x; double value; };
inline constexpr FiniteNRef kFiniteN[] = {
    {1, 1, 0.5, 0.14147106052612918},
    {1, 50, 0.25, 0.5658842421045167},
    {4, 50, 1.1, 8.725257048739419},
    {4, 150, 1.0, 197.3521294339502},
    {30, 200, 0.98, 18.977907010727737},
    {2, 1000, 0.25, 1.1317684842090334},
    {4, 10000, 0.9998, 1160092.4091752572},
    {4, 10000, 1.0, 849250.7763383535},
    {4, 10000, 1.0002, 594480.5670884327},
};

struct CrossCovRef { int l; long long n; double z_re; double zp_re;
                     double abs_value; double bound; };
inline constexpr CrossCovRef kCrossCov[] = {
    {2, 50, 1.5, 0.5, 3.5137382428999756e-09, 3.920821363709897e-06},
    {5, 300, 1.4, 0.6, 7.407133614099552e-45, 3.5252958531945875e-32},
    {3, 100, 2.0, 0.3, 1.717412757588947e-31, 7.888609052210118e-25},
};

struct PhiloxRef { std::uint64_t ctr[4]; std::uint64_t key[2];
                   std::uint64_t out[4]; };
inline constexpr PhiloxRef kPhilox[] = {
    {{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x0000000000000000ull, 0x0000000000000000ull}, {0x16554d9eca36314cull, 0xdb20fe9d672d0fdcull, 0xd7e772cee186176bull, 0x7e68b68aec7ba23bull}},
    {{0xffffffffffffffffull, 0xffffffffffffffffull, 0xffffffffffffffffull, 0xffffffffffffffffull}, {0xffffffffffffffffull, 0xffffffffffffffffull}, {0x87b092c3013fe90bull, 0x438c3c67be8d0224ull, 0x9cc7d7c69cd777b6ull, 0xa09caebf594f0ba0ull}},
    {{0x243f6a8885a308d3ull, 0x13198a2e03707344ull, 0xa4093822299f31d0ull, 0x082efa98ec4e6c89ull}, {0x452821e638d01377ull, 0xbe5466cf34e90c6cull}, {0xa528f45403e61d95ull, 0x38c72dbd566e9788ull, 0xa5a1610e72fd18b5ull, 0x57bd43b5e52b7fe6ull}},
    {{0x0000000000000001ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x9e3779b97f4a7c15ull, 0x243f6a8885a308d3ull}, {0xa06a48b8c0725f20ull, 0xb263d63968c8b7ebull, 0xdf09325552a7c58aull, 0x747aa8f5e4420b25ull}},
};

}  // namespace refvals
