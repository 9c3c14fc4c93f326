#include "asymbench/wm_numerics.hpp"

#include <algorithm>
#include <cmath>

#include "asymbench/errors.hpp"

namespace asymbench::wm {

namespace {

void require_same_shape(const Latent& a, const Latent& b, const char* what) {
    if (!a.same_shape(b))
        throw DomainError(std::string(what) + ": latent shapes differ");
}

void require_valid_shape(int channels, int height, int width) {
    if (channels < 1 || height < 1 || width < 1)
        throw DomainError("latent shape dimensions must be positive");
}

double log_softmax_ce(const double* logits, size_t n, size_t target) {
    double max_logit = logits[0];
    for (size_t i = 1; i < n; ++i) max_logit = std::max(max_logit, logits[i]);
    double sum = 0;
    for (size_t i = 0; i < n; ++i) sum += std::exp(logits[i] - max_logit);
    return max_logit + std::log(sum) - logits[target];
}

}  // namespace

Latent Latent::zeros(int channels, int height, int width) {
    require_valid_shape(channels, height, width);
    Latent z;
    z.channels = channels;
    z.height = height;
    z.width = width;
    z.values.assign(static_cast<size_t>(channels) * height * width, 0.0);
    return z;
}

Latent Latent::constant(int channels, int height, int width, double value) {
    Latent z = zeros(channels, height, width);
    std::fill(z.values.begin(), z.values.end(), value);
    return z;
}

void validate_config(const DiffusionConfig& cfg) {
    if (!(cfg.sigma_data > 0)) throw DomainError("sigma_data must be positive");
    if (cfg.steps < 1) throw DomainError("steps must be >= 1");
    if (!(cfg.sigma_min > 0)) throw DomainError("sigma_min must be positive");
    if (!(cfg.sigma_max > cfg.sigma_min)) throw DomainError("sigma_max must exceed sigma_min");
    if (!(cfg.rho > 0)) throw DomainError("rho must be positive");
    if (!(cfg.s_churn >= 0)) throw DomainError("s_churn must be non-negative");
    if (!(cfg.clamp_scale > 0)) throw DomainError("clamp_scale must be positive");
}

PreconditionCoeffs precondition_coeffs(double sigma, double sigma_data) {
    if (!(sigma_data > 0)) throw DomainError("sigma_data must be positive");
    if (!(sigma >= 0) || !std::isfinite(sigma)) throw DomainError("sigma must be finite and >= 0");
    const double var = sigma * sigma + sigma_data * sigma_data;
    PreconditionCoeffs c;
    c.c_skip = sigma_data * sigma_data / var;
    c.c_out = sigma * sigma_data / std::sqrt(var);
    c.c_in = 1.0 / std::sqrt(var);
    c.c_noise = std::log(sigma) / 4.0;
    return c;
}

double clamp_value(double z, double s) {
    return s * std::tanh(z / s);
}

Latent clamp(const Latent& z, double s) {
    if (!(s > 0)) throw DomainError("clamp scale must be positive");
    Latent out = z;
    for (double& v : out.values) v = clamp_value(v, s);
    return out;
}

Latent apply_denoiser(const RawNetwork& raw, const Latent& z_noised, double sigma,
                      ConditioningContext ctx, double sigma_data, double clamp_scale) {
    const auto c = precondition_coeffs(sigma, sigma_data);
    ctx.c_noise = c.c_noise;

    Latent scaled = z_noised;
    for (double& v : scaled.values) v *= c.c_in;
    Latent inner = raw(scaled, ctx);
    require_same_shape(inner, z_noised, "apply_denoiser");

    Latent out = z_noised;
    for (size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = clamp_value(c.c_skip * z_noised.values[i] + c.c_out * inner.values[i],
                                    clamp_scale);
    return out;
}

Denoiser preconditioned_denoiser(RawNetwork raw, double sigma_data, double clamp_scale) {
    return [raw = std::move(raw), sigma_data, clamp_scale](
               const Latent& z, double sigma, const ConditioningContext& ctx) {
        return apply_denoiser(raw, z, sigma, ctx, sigma_data, clamp_scale);
    };
}

double dyn_loss(const RawNetwork& raw, const Latent& clean_next, const Latent& noised_next,
                double sigma, const ConditioningContext& ctx, double sigma_data) {
    if (!(sigma > 0)) throw DomainError("dyn_loss: sigma must be positive (c_out would vanish)");
    require_same_shape(clean_next, noised_next, "dyn_loss");
    const auto c = precondition_coeffs(sigma, sigma_data);

    ConditioningContext local = ctx;
    local.c_noise = c.c_noise;
    Latent scaled = noised_next;
    for (double& v : scaled.values) v *= c.c_in;
    Latent inner = raw(scaled, local);
    require_same_shape(inner, noised_next, "dyn_loss");

    double loss = 0;
    for (size_t i = 0; i < inner.values.size(); ++i) {
        const double target = (clean_next.values[i] - c.c_skip * noised_next.values[i]) / c.c_out;
        const double diff = inner.values[i] - target;
        loss += diff * diff;
    }
    return loss;
}

double dyn_loss_batch(const RawNetwork& raw, const std::vector<DynStep>& steps, double sigma_data,
                      BatchReduction reduction) {
    if (steps.empty()) throw DomainError("dyn_loss_batch: empty batch");
    if (reduction == BatchReduction::SumOfSquaredNorms) {
        double total = 0;
        for (const auto& s : steps)
            total += dyn_loss(raw, s.clean_next, s.noised_next, s.sigma, s.ctx, sigma_data);
        return total;
    }
    // Squared norm of the summed residual; all steps must share one shape.
    Latent acc = Latent::zeros(steps[0].clean_next.channels, steps[0].clean_next.height,
                               steps[0].clean_next.width);
    for (const auto& s : steps) {
        if (!(s.sigma > 0)) throw DomainError("dyn_loss_batch: sigma must be positive");
        require_same_shape(s.clean_next, acc, "dyn_loss_batch");
        require_same_shape(s.noised_next, acc, "dyn_loss_batch");
        const auto c = precondition_coeffs(s.sigma, sigma_data);
        ConditioningContext local = s.ctx;
        local.c_noise = c.c_noise;
        Latent scaled = s.noised_next;
        for (double& v : scaled.values) v *= c.c_in;
        Latent inner = raw(scaled, local);
        require_same_shape(inner, acc, "dyn_loss_batch");
        for (size_t i = 0; i < acc.values.size(); ++i) {
            const double target =
                (s.clean_next.values[i] - c.c_skip * s.noised_next.values[i]) / c.c_out;
            acc.values[i] += inner.values[i] - target;
        }
    }
    double total = 0;
    for (double v : acc.values) total += v * v;
    return total;
}

double sample_sigma(double p_mean, double p_std, rng::Engine& eng) {
    if (!(p_std >= 0)) throw DomainError("p_std must be non-negative");
    if (!std::isfinite(p_mean)) throw DomainError("p_mean must be finite");
    return std::exp(p_mean + p_std * eng.normal());
}

std::vector<double> build_sigma_schedule(const DiffusionConfig& cfg) {
    validate_config(cfg);
    std::vector<double> sigmas;
    sigmas.reserve(static_cast<size_t>(cfg.steps) + 1);
    if (cfg.steps == 1) {
        sigmas.push_back(cfg.sigma_max);
    } else {
        const double max_inv_rho = std::pow(cfg.sigma_max, 1.0 / cfg.rho);
        const double min_inv_rho = std::pow(cfg.sigma_min, 1.0 / cfg.rho);
        for (int i = 0; i < cfg.steps; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(cfg.steps - 1);
            sigmas.push_back(std::pow(max_inv_rho + t * (min_inv_rho - max_inv_rho), cfg.rho));
        }
    }
    sigmas.push_back(0.0);
    return sigmas;
}

Latent reverse_sample(const Denoiser& denoiser, const ConditioningContext& ctx,
                      const DiffusionConfig& cfg, rng::Engine& eng, int channels, int height,
                      int width) {
    const auto sigmas = build_sigma_schedule(cfg);
    Latent z = Latent::zeros(channels, height, width);
    for (double& v : z.values) v = cfg.sigma_max * eng.normal();

    const double max_gamma = std::sqrt(2.0) - 1.0;
    for (int i = 0; i < cfg.steps; ++i) {
        const double sigma = sigmas[static_cast<size_t>(i)];
        const double sigma_next = sigmas[static_cast<size_t>(i) + 1];

        double sigma_hat = sigma;
        if (cfg.s_churn > 0) {
            const double gamma = std::min(cfg.s_churn / cfg.steps, max_gamma);
            if (gamma > 0) {
                sigma_hat = sigma * (1.0 + gamma);
                const double noise_std = std::sqrt(sigma_hat * sigma_hat - sigma * sigma);
                for (double& v : z.values) v += noise_std * eng.normal();
            }
        }

        Latent denoised = denoiser(z, sigma_hat, ctx);
        require_same_shape(denoised, z, "reverse_sample");
        if (sigma_next == 0.0) {
            // Algebraically identical to the Euler update and bit-exact.
            z = std::move(denoised);
        } else {
            const double scale = (sigma_next - sigma_hat) / sigma_hat;
            for (size_t k = 0; k < z.values.size(); ++k)
                z.values[k] += scale * (z.values[k] - denoised.values[k]);
        }
    }
    return z;
}

Latent dyn_input_switch(const Latent& predicted, const Latent& encoded, rng::Engine& eng) {
    require_same_shape(predicted, encoded, "dyn_input_switch");
    return eng.coin() ? predicted : encoded;
}

double reward_term_loss(const std::vector<std::array<double, 3>>& reward_logits,
                        const std::vector<std::array<double, 2>>& done_logits,
                        const std::vector<double>& rewards, const std::vector<int>& dones) {
    const size_t n = rewards.size();
    if (reward_logits.size() != n || done_logits.size() != n || dones.size() != n)
        throw DomainError("reward_term_loss: sequence lengths differ");
    double loss = 0;
    for (size_t t = 0; t < n; ++t) {
        const size_t reward_class = rewards[t] > 0 ? 2 : (rewards[t] < 0 ? 0 : 1);
        if (dones[t] != 0 && dones[t] != 1)
            throw DomainError("reward_term_loss: termination flags must be 0 or 1");
        loss += log_softmax_ce(reward_logits[t].data(), 3, reward_class);
        loss += log_softmax_ce(done_logits[t].data(), 2, static_cast<size_t>(dones[t]));
    }
    return loss;
}

std::vector<double> lambda_returns(const Trajectory& traj) {
    const size_t n = traj.rewards.size();
    if (traj.values.size() != n + 1)
        throw DomainError("lambda_returns: values must be one longer than rewards");
    if (traj.terminations.size() != n)
        throw DomainError("lambda_returns: terminations must align with rewards");
    std::vector<double> returns(n);
    double next_return = traj.values[n];
    for (size_t t = n; t-- > 0;) {
        if (traj.terminations[t] != 0 && traj.terminations[t] != 1)
            throw DomainError("lambda_returns: termination flags must be 0 or 1");
        const double blend =
            (1.0 - traj.lambda) * traj.values[t + 1] + traj.lambda * next_return;
        next_return =
            traj.rewards[t] + traj.gamma * (1.0 - traj.terminations[t]) * blend;
        returns[t] = next_return;
    }
    return returns;
}

ActorCriticLosses actor_critic_losses(const std::vector<double>& log_probs,
                                      const std::vector<double>& entropies,
                                      const std::vector<double>& returns,
                                      const std::vector<double>& values, double entropy_weight) {
    const size_t n = log_probs.size();
    if (entropies.size() != n || returns.size() != n || values.size() != n)
        throw DomainError("actor_critic_losses: sequence lengths differ");
    ActorCriticLosses out;
    for (size_t t = 0; t < n; ++t) {
        out.policy_loss -= log_probs[t] * (returns[t] - values[t]);
        out.policy_loss -= entropy_weight * entropies[t];
        const double err = values[t] - returns[t];
        out.value_loss += err * err;
    }
    return out;
}

}  // namespace asymbench::wm
