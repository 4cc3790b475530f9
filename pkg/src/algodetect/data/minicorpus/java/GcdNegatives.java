public class GcdNegatives {

    public static int leastCommonMultiple(int a, int b) {
        int candidate = Math.max(a, b);
        while (true) {
            if (candidate % a == 0 && candidate % b == 0) {
                return candidate;
            }
            candidate++;
        }
    }

    public static int modPow(int base, int exponent, int modulus) {
        int result = 1;
        base = base % modulus;
        while (exponent > 0) {
            if ((exponent & 1) == 1) {
                result = (result * base) % modulus;
            }
            exponent = exponent >> 1;
            base = (base * base) % modulus;
        }
        return result;
    }

    public static boolean isEven(int value) {
        return value % 2 == 0;
    }

    public static long factorial(int n) {
        if (n <= 1) {
            return 1L;
        }
        return n * factorial(n - 1);
    }

    public static int sumDigits(int number) {
        int total = 0;
        while (number > 0) {
            total += number % 10;
            number = number / 10;
        }
        return total;
    }

    public static int reverseNumber(int number) {
        int reversed = 0;
        while (number != 0) {
            reversed = reversed * 10 + number % 10;
            number = number / 10;
        }
        return reversed;
    }

    public static boolean divisibleByAll(int value, int[] divisors) {
        for (int i = 0; i < divisors.length; i++) {
            if (value % divisors[i] != 0) {
                return false;
            }
        }
        return true;
    }

    public String describe() {
        return "gcd helper bean";
    }

    public static int maxOfThree(int a, int b, int c) {
        int best = a;
        if (b > best) {
            best = b;
        }
        if (c > best) {
            best = c;
        }
        return best;
    }

    public static double averageArray(double[] values) {
        double total = 0.0;
        for (int i = 0; i < values.length; i++) {
            total += values[i];
        }
        return total / values.length;
    }
}
