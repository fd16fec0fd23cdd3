// Generated by tests/oracle/gen_reference_values.py (mpmath, 50 digits).
// Do not edit by hand.
#pragma once

#include <array>

namespace pointspec::reference {

struct AiryRow { double z, ai, ai_prime, bi, bi_prime; };
struct ComplexRow { double re, im, value_re, value_im; };

inline constexpr std::array<AiryRow, 29> kAiry{{
    {-100, 1.7675339323955287809e-1, -2.422970316605838054e-1, 2.4273887680160131606e-2, 1.7675948932340609324},
    {-50, -1.6188142361232092392e-1, 9.6898983727674908714e-1, -1.3715015212882007338e-1, -1.1453617002654776003},
    {-20, -1.7640612707798468959e-1, 8.928628567364712384e-1, -2.0013930932265134928e-1, -7.9142903383953647936e-1},
    {-10.5, -3.1192603505105060085e-1, 9.0957487390681672879e-2, -3.0356123264021013178e-2, -1.0116140816303775186},
    {-10, 4.0241238486443190689e-2, 9.962650441327900559e-1, -3.1467982964383863316e-1, 1.1941411339990923828e-1},
    {-9.7, 2.8023750191629743829e-1, 4.8628629123926820898e-1, -1.537942087772529709e-1, 8.6898387659821058076e-1},
    {-7.3, 3.3577037051514730896e-1, -1.8009580448329322444e-1, 7.0874113769896312257e-2, 9.0998427043632467362e-1},
    {-5, 3.5076100902411431979e-1, 3.2719281855444313679e-1, -1.3836913490160057685e-1, 7.7841177300189924609e-1},
    {-3.2, -4.1744342056415136518e-1, 6.5031146995263151371e-2, -5.3905755630539283658e-2, -7.5412455331084136105e-1},
    {-1, 5.355608832923521188e-1, -1.0160567116645209395e-2, 1.0399738949694461189e-1, 5.9237562642279235082e-1},
    {-0.5, 4.757280916105395888e-1, -2.0408167033954738614e-1, 3.8035265975105385017e-1, 5.0593371362384716657e-1},
    {0, 3.5502805388781723926e-1, -2.5881940379280679841e-1, 6.1492662744600073515e-1, 4.4828835735382635791e-1},
    {0.3, 2.7880648195500492194e-1, -2.4514636421905480344e-1, 7.5248558508731563801e-1, 4.8004902875244802217e-1},
    {1, 1.3529241631288141552e-1, -1.5914744129679321279e-1, 1.2074235949528712594, 9.3243593339277563296e-1},
    {1.7, 5.4324792732919467752e-2, -7.7374889525325028082e-2, 2.3194075069389249473, 2.5558493569004380161},
    {2.5, 1.5725923380470489995e-2, -2.6250881035903230365e-2, 6.4816607384605786081, 9.4214233173343017556},
    {4.5, 3.3025032351430898366e-4, -7.1786656755750888869e-4, 2.2758808183559971846e+2, 4.6913507732796639795e+2},
    {5, 1.0834442813607441735e-4, -2.47413890868462476e-4, 6.5779204417117118244e+2, 1.4358190802179825187e+3},
    {6, 9.9476943602528895702e-6, -2.4765200397034954754e-5, 6.5364461048098634538e+3, 1.5725602621930476839e+4},
    {8.9, 3.3420610425187034824e-9, -1.00621099218369227e-8, 1.5966418120232306479e+7, 4.7172696726445880954e+7},
    {9.99, 1.1405176956374922827e-10, -3.6328314494855774558e-10, 4.4157417482229213389e+8, 1.3844014155170965429e+9},
    {10, 1.1047532552898685934e-10, -3.5206336767389236366e-10, 4.55641153548225141e+8, 1.4292361344828657761e+9},
    {10.01, 1.0700936543950775494e-10, -3.411846318911626519e-10, 4.7016381378137169672e+8, 1.4755457879946713712e+9},
    {15, 2.164962520737992299e-18, -8.4205679540177727661e-18, 1.8982099567493589685e+16, 7.3197492034070104962e+16},
    {20, 1.6916728686705403136e-27, -7.5863916257483549605e-27, 2.1037650496511038145e+25, 9.3818393361339643491e+25},
    {35, 1.2981999731218426944e-61, -7.6894996836291994943e-61, 2.0722688390069164979e+59, 1.2244860857772323619e+60},
    {50, 4.5849417240748284783e-104, -3.2443318198287992961e-103, 4.9090996994442193288e+101, 3.4687987795459767244e+102},
    {75, 8.4437070360180794404e-190, -7.3152766622293081495e-189, 2.1764891386671657317e+187, 1.884168689039949358e+188},
    {100, 2.6344821520881844896e-291, -2.6351403616044099336e-290, 6.041223996670201399e+288, 6.0397127453106029094e+289},
}};

// Ai and Ai' multiplied by exp(zeta), Bi and Bi' by exp(-zeta), zeta = 2/3 z^(3/2).
inline constexpr std::array<AiryRow, 3> kScaledAiry{{
    {150, 8.0602337791624036738e-2, -9.8730728988910828092e-1, 1.612229576075258488e-1, 1.9743011083846553968},
    {2500, 3.9894194795166555025e-2, -1.9947137291578604099, 7.9788522571093254337e-2, 3.9894181496625108675},
    {1e6, 8.9206205798346242629e-3, -8.9206205820647794065, 1.7841241163386173768e-2, 1.7841241158925863474e+1},
}};

inline constexpr std::array<ComplexRow, 17> kLogGamma{{
    {1.0, 0.0, 0.0, 0.0},
    {0.5, 0.0, 5.7236494292470008707e-1, 0.0},
    {2.0, 0.0, 0.0, 0.0},
    {0.25, 1.0, -6.4236630365897417855e-1, -1.3811810329667325159},
    {0.25, -1.0, -6.4236630365897417855e-1, 1.3811810329667325159},
    {3.7, 0.2, 1.4218754491204911176, 2.3355776042367811993e-1},
    {10.0, 9.0, 9.0210682355220036683, 2.1350837385462770092e+1},
    {0.1, 0.05, 2.1393504258651592868, -4.8479661624522171966e-1},
    {-2.5, 0.3, -4.3208889261320192052e-1, -9.0933454212897415073},
    {-0.5, 0.0, 1.2655121234846453965, -3.1415926535897932385},
    {-7.3, -4.1, -1.9146838884439437866e+1, 1.5905387270574618437e+1},
    {150.0, 80.0, 5.7952465129781512948e+2, 4.0411226455900833893e+2},
    {10000.0, 3.0, 8.2099717046419883274e+4, 2.763087115843304722e+1},
    {0.7, -9.5, -1.3553445914846066284e+1, -1.2203713103609346709e+1},
    {0.3, 0.0, 1.0957979948180755606, 0.0},
    {-123.4, 0.7, -4.7452071558136940898e+2, -3.8587684968414231214e+2},
    {25.0, -40.0, 2.9849018814915747033e+1, -1.3894757254800082995e+2},
}};

inline constexpr std::array<ComplexRow, 12> kGammaRatio{{
    {0.0, 0.0, 2.9586751191886388923, 0.0},
    {-1.0, 0.0, 9.8622503972954629744e-1, 0.0},
    {-3.7, 0.0, 5.192887575974104116e-1, 0.0},
    {0.5, 0.0, -1.351956480134569458, 0.0},
    {2.2, 0.0, 4.2434139704429405383, 0.0},
    {10.9, 0.0, 1.5431054014421583399e-1, 0.0},
    {1000.4, 0.0, -6.2050783686786297178e-2, 0.0},
    {-250.0, 0.0, 6.3245537392020790361e-2, 0.0},
    {-0.1, 0.3, 1.5939054904463040188, 8.6511876788092935701e-1},
    {5.3, -0.7, 2.5613250550993065098e-2, -4.4176146085403718207e-1},
    {1.1, 0.05, 1.6633903901013277501, 6.1515386444419088712e-1},
    {20.2, 2.5, 1.3635638808465259352e-2, 2.2122526781871614163e-1},
}};

inline constexpr double kGammaQuarterOverThreeQuarters = 2.9586751191886388923;
inline constexpr double kAiryZeroProduct = 2.1831620382595246436e-1;
inline constexpr double kIonizationFieldBZero = 3.2263206748005805774e-1;
inline constexpr double kWellLowestRootC1A1B0 = 2.7756773031956899939;

}  // namespace pointspec::reference
