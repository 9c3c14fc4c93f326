#pragma once

#include <array>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "asymbench/rng.hpp"

namespace asymbench::wm {

// Dense latent tensor, row-major over (channel, row, column).
struct Latent {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> values;

    static Latent zeros(int channels, int height, int width);
    static Latent constant(int channels, int height, int width, double value);

    size_t size() const { return values.size(); }
    bool same_shape(const Latent& other) const {
        return channels == other.channels && height == other.height && width == other.width;
    }

    friend bool operator==(const Latent&, const Latent&) = default;
};

// After clamping, every entry lies strictly inside (-clamp_scale, clamp_scale).
using LatentState = Latent;

struct ConditioningContext {
    std::vector<Latent> past_latents;  // burn-in window, most recent last
    std::vector<int> past_actions;
    double c_noise = 0;  // set by apply_denoiser before the inner network runs
};

// Inner network F: sees the pre-scaled latent plus the context.
using RawNetwork = std::function<Latent(const Latent&, const ConditioningContext&)>;
// Full denoiser D(z, sigma, ctx): what reverse_sample consumes.
using Denoiser = std::function<Latent(const Latent&, double, const ConditioningContext&)>;

struct DiffusionConfig {
    double sigma_data = 1.0;
    // Log-normal parameters of ln(sigma) for training-noise draws. No default:
    // callers must supply them before sampling sigmas.
    double p_mean = std::numeric_limits<double>::quiet_NaN();
    double p_std = std::numeric_limits<double>::quiet_NaN();
    int steps = 3;
    double sigma_min = 0.002;
    double sigma_max = 80.0;
    double rho = 7.0;
    double s_churn = 0.0;  // 1 enables the stochastic-run setting
    double clamp_scale = 3.0;
};

// Throws DomainError on any positivity/ordering violation.
void validate_config(const DiffusionConfig& cfg);

struct PreconditionCoeffs {
    double c_skip = 0;
    double c_out = 0;
    double c_in = 0;
    double c_noise = 0;  // ln(sigma)/4; -inf at sigma == 0 (undefined there)
};

PreconditionCoeffs precondition_coeffs(double sigma, double sigma_data);

// s * tanh(z / s): odd, strictly increasing, bounded by s, identity near 0.
double clamp_value(double z, double s);
Latent clamp(const Latent& z, double s);

// clamp(c_skip * z + c_out * F(c_in * z, ctx)). ctx.c_noise is filled in from
// sigma before F runs.
Latent apply_denoiser(const RawNetwork& raw, const Latent& z_noised, double sigma,
                      ConditioningContext ctx, double sigma_data = 1.0, double clamp_scale = 3.0);

// Wraps a raw network into a Denoiser with fixed preconditioning parameters.
Denoiser preconditioned_denoiser(RawNetwork raw, double sigma_data = 1.0,
                                 double clamp_scale = 3.0);

// || F(c_in * z^tau, ctx) - (z^0 - c_skip * z^tau) / c_out ||^2 for one step.
// Identity: the unclamped denoiser satisfies ||D - z^0||^2 == c_out^2 * loss.
double dyn_loss(const RawNetwork& raw, const Latent& clean_next, const Latent& noised_next,
                double sigma, const ConditioningContext& ctx, double sigma_data = 1.0);

struct DynStep {
    Latent clean_next;
    Latent noised_next;
    double sigma = 1.0;
    ConditioningContext ctx;
};

enum class BatchReduction { SumOfSquaredNorms, SquaredNormOfSum };

double dyn_loss_batch(const RawNetwork& raw, const std::vector<DynStep>& steps,
                      double sigma_data = 1.0,
                      BatchReduction reduction = BatchReduction::SumOfSquaredNorms);

// exp(p_mean + p_std * N(0,1)); p_std == 0 degenerates to exp(p_mean).
double sample_sigma(double p_mean, double p_std, rng::Engine& eng);

// steps+1 entries: rho-spaced from sigma_max down to sigma_min, then 0.
std::vector<double> build_sigma_schedule(const DiffusionConfig& cfg);

// Euler reverse diffusion from z ~ N(0, sigma_max^2 I) with optional churn
// (gamma = min(s_churn/steps, sqrt(2)-1), noise of variance sigma_hat^2 -
// sigma^2). The final step to sigma == 0 lands exactly on the denoiser output,
// so the returned latent carries the denoiser's clamp; no second clamp is
// applied (it would perturb an already-bounded latent).
Latent reverse_sample(const Denoiser& denoiser, const ConditioningContext& ctx,
                      const DiffusionConfig& cfg, rng::Engine& eng, int channels = 16,
                      int height = 8, int width = 8);

// Returns predicted or encoded, each with probability 1/2.
Latent dyn_input_switch(const Latent& predicted, const Latent& encoded, rng::Engine& eng);

// Sum over time of CE(reward_logits_t, class of sign(r_t)) + CE(done_logits_t,
// d_t). Classes: sign -1 -> 0, 0 -> 1, +1 -> 2; log-probabilities normalized.
double reward_term_loss(const std::vector<std::array<double, 3>>& reward_logits,
                        const std::vector<std::array<double, 2>>& done_logits,
                        const std::vector<double>& rewards, const std::vector<int>& dones);

struct Trajectory {
    std::vector<double> rewards;
    std::vector<double> values;      // rewards.size() + 1; final entry is the bootstrap
    std::vector<int> terminations;   // aligned with rewards, each 0 or 1
    double gamma = 0.985;
    double lambda = 0.95;
    int horizon = 15;  // imagination-rollout length used by callers
    double entropy_weight = 0.001;
};

// R_t = r_t + gamma (1 - d_t) ((1 - lambda) V_{t+1} + lambda R_{t+1}), R_T = V_T.
std::vector<double> lambda_returns(const Trajectory& traj);

struct ActorCriticLosses {
    double policy_loss = 0;
    double value_loss = 0;
};

// policy: -sum log_prob * (return - value) - entropy_weight * sum entropies;
// value: sum (value - return)^2. Targets enter as plain values (stop-grad is a
// training-time concern, not represented here).
ActorCriticLosses actor_critic_losses(const std::vector<double>& log_probs,
                                      const std::vector<double>& entropies,
                                      const std::vector<double>& returns,
                                      const std::vector<double>& values,
                                      double entropy_weight = 0.001);

}  // namespace asymbench::wm
