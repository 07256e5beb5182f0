#pragma once
// Generated by generate_oracles.py from dense numpy evolution. Do not edit.

namespace oracle {

inline constexpr double kReflect2Re0 = 2.2204460492503131e-16;
inline constexpr double kReflect2Re1 = -0.99999999999999978;
inline constexpr double kN4Curve[] = {0.24999999999999989, 0.99999999999999867, 0.24999999999999944, 0.24999999999999922, 0.999999999999996, 0.24999999999999878, 0.24999999999999856};
inline constexpr double kN4Omega = 1.0471975511965979;
inline constexpr double kN4Mean = 0.49999999999999434;
inline constexpr double kN4Amplitude = 0.499999999999995;
inline constexpr double kN4Phase = 0.52359877559830015;
inline constexpr double kPseudoPureDiag[] = {0.625, 0.125, 0.125, 0.125};
inline constexpr double kOmega10 = 0.062510176998990308;
inline constexpr double kPure10_mean = 0.49999999999985889;
inline constexpr double kPure10_amplitude = 0.49999999999986028;
inline constexpr double kPure10_phase = 0.031255088499509476;
inline constexpr double kPure10_p_max = 0.99999999999971911;
inline constexpr double kPure10_t_opt = 24.6286494808718;
inline constexpr double kPure10_speedup = 20.788797225666332;
inline constexpr double kPseudoPure10_mean = 0.050878906249985367;
inline constexpr double kPseudoPure10_amplitude = 0.049999999999985431;
inline constexpr double kPseudoPure10_phase = 0.031255088499518253;
inline constexpr double kPseudoPure10_p_max = 0.1008789062499708;
inline constexpr double kPseudoPure10_speedup = 2.0971511263782476;
inline constexpr double kPseudoPure10_entropy = 9.4617190483124602;
inline constexpr double kMMix10_mean[] = {0.49999999999985889, 0.25024437927657078, 0.1253665689149219, 0.062927663734096875, 0.031708211143686431, 0.016098484848480522, 0.0082936217008782315};
inline constexpr double kMMix10_amplitude[] = {0.49999999999986028, 0.24975562072330176, 0.12463343108501, 0.062072336265865134, 0.030791788856297186, 0.01515151515151124, 0.0073313782991179582};
inline constexpr double kMMix10_phase[] = {0.031255088499509476, 0.031255088499514798, 0.031255088499513146, 0.031255088499524949, 0.031255088499518753, 0.031255088499530077, 0.031255088499510662};
inline constexpr double kMix9Entropy10 = 8.9999999999999982;

}  // namespace oracle
