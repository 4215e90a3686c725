#pragma once

// Generated by make_oracles.py; do not edit.

namespace oracle {

struct Bracket {
  double lo, hi;
};

struct GammaCase {
  double x;
  Bracket value;
};

struct KantorovichCase {
  double delta, K, g;
  Bracket r, unique;
};

struct EigCase {
  double a[25];
  Bracket min_eig;
};

// pi^2
inline constexpr Bracket kPiSquared{0x1.3bd3cc9be45dep+3, 0x1.3bd3cc9be45dfp+3};

// Gamma(5/3) Gamma(4/3)
inline constexpr Bracket kGamma53Gamma43{0x1.9cbd78a291fd7p-1, 0x1.9cbd78a291fd8p-1};

// Gamma at exactly representable points
inline constexpr GammaCase kGammaCases[] = {
    {0x1.0000000000000p-1, {0x1.c5bf891b4ef6ap+0, 0x1.c5bf891b4ef6bp+0}},
    {0x1.8000000000000p-1, {0x1.39b4e8b50f62cp+0, 0x1.39b4e8b50f62dp+0}},
    {0x1.4cccccccccccdp+0, {0x1.cb81477381f32p-1, 0x1.cb81477381f33p-1}},
    {0x1.4000000000000p+1, {0x1.544fa6d47b38fp+0, 0x1.544fa6d47b390p+0}},
    {0x1.d99999999999ap+1, {0x1.0aebf5759a454p+2, 0x1.0aebf5759a455p+2}},
    {0x1.d000000000000p+2, {0x1.20d86288356b4p+10, 0x1.20d86288356b5p+10}},
    {0x1.3cccccccccccdp+3, {0x1.1b12ed0bb7632p+18, 0x1.1b12ed0bb7633p+18}},
    {0x1.8000000000000p+3, {0x1.308a800000000p+25, 0x1.308a800000000p+25}},
    {0x1.f000000000000p+3, {0x1.37d7bedf4639cp+38, 0x1.37d7bedf4639dp+38}},
    {0x1.e400000000000p+4, {0x1.045cd5a158efdp+104, 0x1.045cd5a158efep+104}},
};

// Talenti constant, n = 2, q = 6/5
inline constexpr Bracket kTalenti2_65{0x1.1ea1005f778a5p-2, 0x1.1ea1005f778a6p-2};

// corollary bound, n = 3, p = 4, |Omega| = 1
inline constexpr Bracket kCorollary3_4{0x1.45a3c73d23255p-2, 0x1.45a3c73d23256p-2};

// spectral bound part b, n = 3, p = 4, rho = 10
inline constexpr Bracket kPlum3_4_rho10{0x1.abaed90caf8aap-1, 0x1.abaed90caf8abp-1};

// H^2 -> L^inf series constant, unit square
inline constexpr Bracket kLinfUnitSquare{0x1.0e5b613c79d4dp-3, 0x1.0e5b613c79d4ep-3};

// 1.25 sin(pi x) sin(pi y) - 0.5 sin(2 pi x) sin(3 pi y) at (0.3, 0.7)
inline constexpr Bracket kTwoModeValue{0x1.57a620021a253p-1, 0x1.57a620021a254p-1};

// (delta, K, g) with 2 K^2 delta g = 1/2 and the closed-form radii
inline constexpr KantorovichCase kKantorovichCases[] = {
    {0x1.3eae49551421fp-11, 0x1.f10c0a6c54e62p+3, 0x1.b46a0f37db38ap+0, {0x1.6a7430d59af85p-7, 0x1.6a7430d59af86p-7}, {0x1.081126a6efb46p-4, 0x1.081126a6efb47p-4}},
    {0x1.0f6c71cf42428p-12, 0x1.b6004d4a0fcc9p+1, 0x1.49ee0d8d225a3p+6, {0x1.10088dd2ffbd4p-10, 0x1.10088dd2ffbd5p-10}, {0x1.8c61b935ffc2fp-8, 0x1.8c61b935ffc30p-8}},
    {0x1.789107d3b16bbp-11, 0x1.15e1950462278p+4, 0x1.2769c68e5ea0dp+0, {0x1.dee243d4f6328p-7, 0x1.dee243d4f6329p-7}, {0x1.5ce477a82d761p-4, 0x1.5ce477a82d762p-4}},
    {0x1.5ee9e2fa942b8p-12, 0x1.4109f2f15b61ap+2, 0x1.db03062e6d779p+4, {0x1.01c8e3c525502p-9, 0x1.01c8e3c525503p-9}, {0x1.779eafe7d5482p-7, 0x1.779eafe7d5483p-7}},
    {0x1.63778c6bf842bp-11, 0x1.2132f7b12d720p+4, 0x1.20eec71b574bcp+0, {0x1.d6768be5b62f6p-7, 0x1.d6768be5b62f7p-7}, {0x1.56c1e950f6d27p-4, 0x1.56c1e950f6d28p-4}},
    {0x1.0499dd98f9436p-13, 0x1.7949557dff6eep+0, 0x1.cf20d4dd7093fp+9, {0x1.c1f680632c065p-13, 0x1.c1f680632c066p-13}, {0x1.47d26e316bed9p-10, 0x1.47d26e316bedap-10}},
};

// symmetric 5x5 matrices (row-major) and their smallest eigenvalue
inline constexpr EigCase kEigCases[] = {
    {{0x1.f767c482c9b00p-3, 0x1.ef2e045bc8fb8p-2, 0x1.2e4738d8608fep-1, 0x1.c511afebb6a18p-1, 0x1.eb4ff1a6eb8c8p-2, 0x1.ef2e045bc8fb8p-2, 0x1.b075f6c3d8588p-1, -0x1.e24c74146f792p-1, -0x1.199e84e56b1f0p-4, 0x1.c5ff4d9fe0f50p-1, 0x1.2e4738d8608fep-1, -0x1.e24c74146f792p-1, 0x1.3119920d46410p-2, 0x1.9a85a89413b44p-1, -0x1.8c13bc5069136p-1, 0x1.c511afebb6a18p-1, -0x1.199e84e56b1f0p-4, 0x1.9a85a89413b44p-1, -0x1.fac5d10d6c780p-5, -0x1.0382694f43532p-1, 0x1.eb4ff1a6eb8c8p-2, 0x1.c5ff4d9fe0f50p-1, -0x1.8c13bc5069136p-1, -0x1.0382694f43532p-1, 0x1.667d2c686bfa0p-4}, {-0x1.3b60747bcf04ep+0, -0x1.3b60747bcf04dp+0}},
    {{0x1.2edcf47fa8468p-3, -0x1.f29231a268928p-1, -0x1.2211954bc1b4ep-1, -0x1.c39ebfd1637d8p-2, 0x1.aa5670ef08e64p-1, -0x1.f29231a268928p-1, 0x1.101a5531d914ep-1, -0x1.5c90b69e793a6p-1, 0x1.30474d09350f2p-1, -0x1.71e6f430e7cb8p-1, -0x1.2211954bc1b4ep-1, -0x1.5c90b69e793a6p-1, 0x1.e115e4e3c1808p-3, -0x1.7e428e6f12bb6p-1, -0x1.fe2ebb038a73cp-1, -0x1.c39ebfd1637d8p-2, 0x1.30474d09350f2p-1, -0x1.7e428e6f12bb6p-1, 0x1.7c518680ae19cp-1, -0x1.2984441cfae1cp-1, 0x1.aa5670ef08e64p-1, -0x1.71e6f430e7cb8p-1, -0x1.fe2ebb038a73cp-1, -0x1.2984441cfae1cp-1, -0x1.2358e7851a8e4p-1}, {-0x1.d7b8fb250f907p+0, -0x1.d7b8fb250f906p+0}},
    {{0x1.edffcc953ac8ap-1, 0x1.7d5876154f5d0p-1, -0x1.af80c5afb48b8p-2, 0x1.d88daf9975348p-1, 0x1.4151938125520p-4, 0x1.7d5876154f5d0p-1, 0x1.6c3262a02fda8p-2, -0x1.2e4e4768bf14ep-1, 0x1.c38f367bf9ab0p-1, 0x1.866f483266aa0p-2, -0x1.af80c5afb48b8p-2, -0x1.2e4e4768bf14ep-1, 0x1.ddc308fb88474p-1, 0x1.933104b10d77ap-1, -0x1.9c1490fa7a600p-2, 0x1.d88daf9975348p-1, 0x1.c38f367bf9ab0p-1, 0x1.933104b10d77ap-1, -0x1.1c487395c8ac8p-2, -0x1.560f9d8837f24p-1, 0x1.4151938125520p-4, 0x1.866f483266aa0p-2, -0x1.9c1490fa7a600p-2, -0x1.560f9d8837f24p-1, -0x1.6acd1e5e3b692p-1}, {-0x1.c2be18d1f6371p+0, -0x1.c2be18d1f6370p+0}},
    {{-0x1.bd4c03d585caep-1, -0x1.96d10a2ebeda8p-2, 0x1.a656ab2c1ab50p-3, -0x1.fc8922b3b6f64p-1, 0x1.6c68cab52a438p-2, -0x1.96d10a2ebeda8p-2, -0x1.4bfcbaef19274p-2, -0x1.8534c6a507b1cp-2, 0x1.46299a272d1d0p-1, -0x1.3b788a6dbb740p-5, 0x1.a656ab2c1ab50p-3, -0x1.8534c6a507b1cp-2, -0x1.794176d0b2b38p-2, -0x1.33b7cc383dd20p-5, 0x1.a329922d16348p-2, -0x1.fc8922b3b6f64p-1, 0x1.46299a272d1d0p-1, -0x1.33b7cc383dd20p-5, -0x1.c5a18c5f356f2p-1, 0x1.e6807ff83189ep-1, 0x1.6c68cab52a438p-2, -0x1.3b788a6dbb740p-5, 0x1.a329922d16348p-2, 0x1.e6807ff83189ep-1, -0x1.e895ee067ff1ap-1}, {-0x1.3f7418cb5fef9p+1, -0x1.3f7418cb5fef8p+1}},
    {{0x1.ff94885b8e8f8p-2, 0x1.612874b3bfe88p-1, -0x1.ed7fb439b8352p-1, 0x1.26a4deb59c218p-1, -0x1.120ddf9fa6844p-2, 0x1.612874b3bfe88p-1, 0x1.419cf5aeb63c0p-3, -0x1.f6b427c609ebap-1, -0x1.d026c425682d8p-1, -0x1.46bd0ab02a2c0p-1, -0x1.ed7fb439b8352p-1, -0x1.f6b427c609ebap-1, 0x1.d21aadfa29992p-1, -0x1.36c305f0c3ef4p-1, 0x1.05dfc41f7fc58p-1, 0x1.26a4deb59c218p-1, -0x1.d026c425682d8p-1, -0x1.36c305f0c3ef4p-1, 0x1.b7f79068e526ep-1, 0x1.c4a7233b298b8p-1, -0x1.120ddf9fa6844p-2, -0x1.46bd0ab02a2c0p-1, 0x1.05dfc41f7fc58p-1, 0x1.c4a7233b298b8p-1, -0x1.3eb4bf7ccd0fcp-2}, {-0x1.4fdad87dec17dp+0, -0x1.4fdad87dec17cp+0}},
    {{-0x1.29622e1b77494p-2, 0x1.94b6f201d4b00p-5, 0x1.1a37ad3b3ea92p-1, -0x1.915a96b482a26p-1, 0x1.fcb81ec7eec60p-2, 0x1.94b6f201d4b00p-5, 0x1.305c30af03984p-1, 0x1.7053b525dedd8p-1, -0x1.da7d404894386p-1, 0x1.c87fd7fd3a4b4p-1, 0x1.1a37ad3b3ea92p-1, 0x1.7053b525dedd8p-1, -0x1.a2a1bee5506aap-1, -0x1.4629d37cb3e4cp-2, 0x1.c5f318b9aa0c0p-3, -0x1.915a96b482a26p-1, -0x1.da7d404894386p-1, -0x1.4629d37cb3e4cp-2, 0x1.ac1f0c12f8130p-1, -0x1.47c34cb96d460p-2, 0x1.fcb81ec7eec60p-2, 0x1.c87fd7fd3a4b4p-1, 0x1.c5f318b9aa0c0p-3, -0x1.47c34cb96d460p-2, 0x1.b260dc59ef046p-1}, {-0x1.7b9df95802f65p+0, -0x1.7b9df95802f64p+0}},
    {{0x1.71d1e85e48790p-4, -0x1.801a0550648b4p-2, -0x1.773191b19ec60p-2, -0x1.4a434419c1c94p-1, -0x1.afed53afc4d42p-1, -0x1.801a0550648b4p-2, -0x1.678f22a3b1d8ep-1, 0x1.836df74f2e84cp-2, 0x1.fca5f43decf44p-1, -0x1.5a980523d2d1ap-1, -0x1.773191b19ec60p-2, 0x1.836df74f2e84cp-2, -0x1.ce485775a3294p-1, 0x1.f261404ce212cp-1, 0x1.12af0fb1c5fc0p-4, -0x1.4a434419c1c94p-1, 0x1.fca5f43decf44p-1, 0x1.f261404ce212cp-1, -0x1.817b8fefb4708p-3, -0x1.0cf7a22135612p-1, -0x1.afed53afc4d42p-1, -0x1.5a980523d2d1ap-1, 0x1.12af0fb1c5fc0p-4, -0x1.0cf7a22135612p-1, 0x1.80dc6eb00add8p-3}, {-0x1.bca920cef88afp+0, -0x1.bca920cef88aep+0}},
    {{0x1.4e20692006d80p-1, -0x1.6b310565690e0p-4, -0x1.407b6fb5701d0p-3, -0x1.c6f4af02ae784p-1, 0x1.aa0e1551b49cep-1, -0x1.6b310565690e0p-4, -0x1.de7e5419630f6p-1, -0x1.a5c6d54e5aa80p-7, 0x1.5a8d349a80f04p-1, -0x1.7a4b610264bf0p-1, -0x1.407b6fb5701d0p-3, -0x1.a5c6d54e5aa80p-7, 0x1.da72e090656c8p-2, 0x1.cc97fe90fed60p-1, 0x1.0b0ec8e580c34p-2, -0x1.c6f4af02ae784p-1, 0x1.5a8d349a80f04p-1, 0x1.cc97fe90fed60p-1, 0x1.26ebf9b4f8220p-1, -0x1.92cf6cea64140p-1, 0x1.aa0e1551b49cep-1, -0x1.7a4b610264bf0p-1, 0x1.0b0ec8e580c34p-2, -0x1.92cf6cea64140p-1, -0x1.0c0fdb4106748p-3}, {-0x1.7e2572555f8c8p+0, -0x1.7e2572555f8c7p+0}},
};

}  // namespace oracle
