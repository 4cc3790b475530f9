public class PrimeFactorsPositives {

    public static java.util.List<Integer> primeFactors(int n) {
        java.util.List<Integer> factors = new java.util.ArrayList<Integer>();
        for (int d = 2; d <= n; d++) {
            while (n % d == 0) {
                factors.add(d);
                n /= d;
            }
        }
        return factors;
    }

    public static java.util.List<Long> primeFactorsWhile(long n) {
        java.util.List<Long> factors = new java.util.ArrayList<Long>();
        long d = 2;
        while (d * d <= n) {
            while (n % d == 0) {
                factors.add(d);
                n /= d;
            }
            d++;
        }
        if (n > 1) {
            factors.add(n);
        }
        return factors;
    }

    public static String factorize(int num) {
        StringBuilder result = new StringBuilder();
        int n = num;
        for (int divisor = 2; divisor <= n; divisor++) {
            while (n % divisor == 0) {
                if (result.length() > 0) {
                    result.append(" x ");
                }
                result.append(divisor);
                n = n / divisor;
            }
        }
        return result.toString();
    }

    public static String primeFactorsRecursive(int n, int d) {
        if (n <= 1) {
            return "";
        }
        if (n % d == 0) {
            return d + " " + primeFactorsRecursive(n / d, d);
        }
        return primeFactorsRecursive(n, d + 1);
    }

    public static int[] listPrimeFactors(int value) {
        int[] buffer = new int[64];
        int count = 0;
        int n = value;
        for (int d = 2; d * d <= n; d++) {
            while (n % d == 0) {
                buffer[count++] = d;
                n /= d;
            }
        }
        if (n > 1) {
            buffer[count++] = n;
        }
        int[] result = new int[count];
        for (int i = 0; i < count; i++) {
            result[i] = buffer[i];
        }
        return result;
    }

    public static int primeFactorCount(int n) {
        int count = 0;
        for (int d = 2; d <= n; d++) {
            while (n % d == 0) {
                count++;
                n /= d;
            }
        }
        return count;
    }

    public static long largestPrimeFactor(long n) {
        long largest = 1;
        for (long d = 2; d * d <= n; d++) {
            while (n % d == 0) {
                largest = d;
                n /= d;
            }
        }
        if (n > 1) {
            largest = n;
        }
        return largest;
    }

    public static java.util.Map<Integer, Integer> primeFactorsMap(int n) {
        java.util.Map<Integer, Integer> exponents = new java.util.HashMap<Integer, Integer>();
        for (int d = 2; d <= n; d++) {
            int power = 0;
            while (n % d == 0) {
                power++;
                n /= d;
            }
            if (power > 0) {
                exponents.put(d, power);
            }
        }
        return exponents;
    }

    static String decompose(int n) {
        StringBuilder parts = new StringBuilder();
        int count = 0;
        for (int i = 2; i <= n; i++) {
            while (n % i == 0) {
                parts.append(i).append(",");
                n = n / i;
                count++;
            }
        }
        return count + ":" + parts.toString();
    }

    public static int primeFactorSum(int n) {
        int total = 0;
        for (int d = 2; d <= n; d++) {
            while (n % d == 0) {
                total += d;
                n /= d;
            }
        }
        return total;
    }
}
