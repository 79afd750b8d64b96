/**
 * Typed client for the stepwise wire protocol.
 *
 * Every call goes through POST /api with a service name; responses always
 * arrive as HTTP 200 with an `ok` flag. A rejected fetch (server down,
 * network error) is surfaced as ServiceUnreachableError so screens can show
 * a banner instead of a broken judgment.
 */

export type Strategy = "innermost" | "outermost" | "free";

export interface WireError {
  kind: string;
  message: string;
}

export type ServiceResponse<T> =
  | { ok: true; service: string; payload: T }
  | { ok: false; service: string; error: WireError };

export interface StepPayload {
  ruleId: string;
  message: string;
  focus: number[];
  result: string;
}

export interface DerivationStepPayload extends StepPayload {
  annotation: string;
}

export interface DerivationPayload {
  start: string;
  strategy: Strategy;
  status: "complete" | "stuck" | "budget";
  steps: DerivationStepPayload[];
  final: string;
  stepCount: number;
}

export type DiagnosisKind =
  | "CorrectStep"
  | "EquivalentButOffStrategy"
  | "CorrectResultWrongPath"
  | "Incorrect"
  | "ParseError";

export interface DiagnosisPayload {
  kind: DiagnosisKind;
  ruleId: string | null;
  message: string;
  stepsRemaining: number | null;
  expected: string[];
}

export interface ExamplesPayload {
  examples: string[];
}

export interface HintPayload {
  hint: StepPayload | null;
}

export interface StepsRemainingPayload {
  stepsRemaining: number;
}

export class ServiceUnreachableError extends Error {
  constructor(cause: unknown) {
    super(`service unreachable: ${cause instanceof Error ? cause.message : cause}`);
    this.name = "ServiceUnreachableError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private async post<T>(body: Record<string, unknown>): Promise<ServiceResponse<T>> {
    let response: Response;
    try {
      response = await this.fetchFn(`${this.baseUrl}/api`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (cause) {
      throw new ServiceUnreachableError(cause);
    }
    return (await response.json()) as ServiceResponse<T>;
  }

  examples(): Promise<ServiceResponse<ExamplesPayload>> {
    return this.post({ service: "examples" });
  }

  derivation(expr: string, strategy: Strategy): Promise<ServiceResponse<DerivationPayload>> {
    return this.post({ service: "derivation", expr, strategy });
  }

  hint(expr: string, strategy: Strategy): Promise<ServiceResponse<HintPayload>> {
    return this.post({ service: "onefirst", expr, strategy });
  }

  stepsRemaining(
    expr: string,
    strategy: Strategy,
  ): Promise<ServiceResponse<StepsRemainingPayload>> {
    return this.post({ service: "stepsremaining", expr, strategy });
  }

  diagnose(
    expr: string,
    submitted: string,
    strategy: Strategy,
  ): Promise<ServiceResponse<DiagnosisPayload>> {
    return this.post({ service: "diagnose", expr, submitted, strategy });
  }
}
