public class GcdPositives {

    public static int gcdRecursive(int a, int b) {
        if (b == 0) {
            return a;
        }
        return gcdRecursive(b, a % b);
    }

    public static int gcdIterative(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    public static int gcdSubtraction(int a, int b) {
        while (a != b) {
            if (a > b) {
                a = a - b;
            } else {
                b = b - a;
            }
        }
        return a;
    }

    public static int hcfModulo(int num1, int num2) {
        while (num2 != 0) {
            int remainder = num1 % num2;
            num1 = num2;
            num2 = remainder;
        }
        return num1;
    }

    public static long greatestCommonDivisor(long first, long second) {
        long divisor = Math.min(Math.abs(first), Math.abs(second));
        long a = Math.max(Math.abs(first), Math.abs(second));
        long b = divisor;
        while (b != 0) {
            long remainder = a % b;
            a = b;
            b = remainder;
        }
        return a;
    }

    public static int gcdCompact(int a, int b) {
        return b == 0 ? a : gcdCompact(b, a % b);
    }

    public static long gcdLongs(long a, long b) {
        while (b != 0L) {
            long temp = a % b;
            a = b;
            b = temp;
        }
        return a;
    }

    public static int euclideanAlgorithm(int a, int b) {
        // Classic Euclid: replace the larger number with the remainder.
        while (b > 0) {
            int remainder = a % b;
            a = b;
            b = remainder;
        }
        return a;
    }

    public static int gcdOfArray(int[] numbers) {
        int result = numbers[0];
        for (int i = 1; i < numbers.length; i++) {
            int a = result;
            int b = numbers[i];
            while (b != 0) {
                int t = b;
                b = a % b;
                a = t;
            }
            result = a;
        }
        return result;
    }

    static int mystery(int x, int y) {
        while (y != 0) {
            int z = x % y;
            x = y;
            y = z;
        }
        return x;
    }
}
